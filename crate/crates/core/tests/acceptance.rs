//! Acceptance run: one PASS/FAIL line per criterion. Built with
//! `harness = false`; exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use oddhole::cleaning::{no_great_pyramid_solver, no_heavy_clean, test_clean, test_cleanable};
use oddhole::locator::locate_traced;
use oddhole::oracle::generate::random_graph;
use oddhole::oracle::lemmas::{
    check_covering_edge, check_even_major_paths, check_no_short_shortcut, check_not_big, check_pyramid_majors,
    check_stable_common_neighbor,
};
use oddhole::oracle::{
    all_shortest_odd_holes, brute_find_pyramids, brute_shortest_odd_hole_unguarded, generate, optimal_great_pyramids,
    Family, Instance, InstanceSpec, Planted,
};
use oddhole::structure::{big_majors, check_odd_hole, is_jewelled};
use oddhole::{
    find_5hole, find_great_pyramid, find_jewelled, locate_from_tuple, shortest_odd_hole_with, Detection, DetectorTag,
    Graph, Hole, LocatorMode, PipelineConfig,
};

const RANDOM_N: std::ops::RangeInclusive<usize> = 6..=12;
const RANDOM_P: [f64; 3] = [0.2, 0.35, 0.5];
const SEEDS_PER_CELL: u64 = 24;
const FULL_GUARD: usize = 12;
const LEMMA_INSTANCES: usize = 200;
const LEMMA_MAX_N: usize = 14;
const FUZZ_GRAPHS: u64 = 10_000;
const FUZZ_MAX_N: usize = 10;
const HINTED_MAX_N: usize = 30;
const SMOKE_MAX_N: usize = 8;
const SMOKE_BUDGET: Duration = Duration::from_secs(5 * 60);
const FIVE_HOLE_BUDGET: Duration = Duration::from_secs(10);
const JEWEL_BUDGET: Duration = Duration::from_secs(60);
const CLEAN_BUDGET: Duration = Duration::from_secs(10 * 60);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], detail: String) -> Outcome {
    let mut detail = detail;
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome { pass: failures.is_empty(), detail }
}

fn full(guard: usize) -> PipelineConfig {
    PipelineConfig { locator: LocatorMode::Full { guard }, short_circuit: true, allow_partial: false }
}

fn oracle(g: &Graph) -> Option<usize> {
    brute_shortest_odd_hole_unguarded(g).length()
}

fn pipeline_min(g: &Graph, cfg: &PipelineConfig) -> Result<Option<usize>, String> {
    let r = shortest_odd_hole_with(g, cfg).map_err(|e| e.to_string())?;
    if let Some(h) = r.hole() {
        check_odd_hole(g, h.vertices())
            .map_err(|d| format!("reported hole {:?} invalid: {}", h.vertices(), d.reason()))?;
    }
    Ok(r.min_length())
}

fn oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut with_hole = 0;
    for n in RANDOM_N {
        for (pi, &p) in RANDOM_P.iter().enumerate() {
            for s in 0..SEEDS_PER_CELL {
                let seed = 1000 * n as u64 + 100 * pi as u64 + s;
                let g = random_graph(n, p, seed).unwrap();
                count += 1;
                let want = oracle(&g);
                with_hole += want.is_some() as usize;
                match pipeline_min(&g, &full(FULL_GUARD)) {
                    Ok(got) if got == want => {}
                    Ok(got) => failures.push(format!("n={n} p={p} seed={seed}: pipeline {got:?}, oracle {want:?}")),
                    Err(e) => failures.push(format!("n={n} p={p} seed={seed}: {e}")),
                }
            }
        }
    }
    outcome(&failures, format!("{count} random graphs ({with_hole} with an odd hole), {} mismatches", failures.len()))
}

fn hinted_config(inst: &Instance) -> PipelineConfig {
    let Some(Planted::Pyramid { tuple, .. }) = &inst.planted else { panic!("not a pyramid instance") };
    PipelineConfig { locator: LocatorMode::Hinted(vec![*tuple]), short_circuit: true, allow_partial: false }
}

fn structured_families() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut check = |name: String, g: &Graph, cfg: &PipelineConfig, failures: &mut Vec<String>| {
        count += 1;
        let want = oracle(g);
        match pipeline_min(g, cfg) {
            Ok(got) if got == want => {}
            Ok(got) => failures.push(format!("{name}: pipeline {got:?}, oracle {want:?}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    };
    for k in 2..=8 {
        check(format!("C{}", 2 * k + 1), &common::cycle(2 * k + 1), &full(FULL_GUARD), &mut failures);
    }
    for (l1, l2, l3) in [(3, 3, 2), (4, 4, 3), (5, 5, 2), (5, 3, 2)] {
        for ambient in 0..=4 {
            let spec = InstanceSpec::new(Family::PlantedPyramid { l1, l2, l3, ambient }, ambient as u64);
            let inst = generate(&spec).unwrap();
            let cfg = hinted_config(&inst);
            let name = format!("pyramid ({l1},{l2},{l3}) ambient {ambient}");
            check(name.clone(), &inst.graph, &cfg, &mut failures);
            let want = oracle(&inst.graph);
            match find_great_pyramid(&inst.graph, &cfg.locator) {
                Ok(Detection::Found { hole, detector: DetectorTag::GreatPyramid }) if Some(hole.len()) == want => {}
                other => failures.push(format!("{name}: hinted locator gave {other:?}, oracle {want:?}")),
            }
        }
    }
    for p_len in 2..=5 {
        for ambient in 0..=2 {
            let spec = InstanceSpec::new(Family::PlantedJewel { p_len, ambient }, ambient as u64);
            let inst = generate(&spec).unwrap();
            check(format!("jewel p={p_len} ambient {ambient}"), &inst.graph, &full(FULL_GUARD), &mut failures);
        }
    }
    check("Petersen".into(), &common::petersen(), &full(FULL_GUARD), &mut failures);
    outcome(&failures, format!("{count} instances, {} mismatches", failures.len()))
}

/// Valid `(l1, l2, l3)` with `1 + l1 + l2 + l3 <= max_n`.
fn pyramid_shapes(max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for l1 in 2..max_n {
        for l2 in 2..max_n {
            for l3 in 1..l1.min(l2) {
                if 1 + l1 + l2 + l3 <= max_n && l1 % 2 == l2 % 2 && l3 % 2 != l1 % 2 {
                    out.push((l1, l2, l3));
                }
            }
        }
    }
    out
}

fn hinted_completeness() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for (i, (l1, l2, l3)) in pyramid_shapes(HINTED_MAX_N).into_iter().enumerate() {
        let base = 1 + l1 + l2 + l3;
        let ambient = (i % 4).min(HINTED_MAX_N - base);
        let spec = InstanceSpec::new(Family::PlantedPyramid { l1, l2, l3, ambient }, i as u64);
        let inst = generate(&spec).unwrap();
        let Some(Planted::Pyramid { tuple, arcs, .. }) = &inst.planted else { unreachable!() };
        count += 1;
        let name = format!("({l1},{l2},{l3}) ambient {ambient}");
        let want = oracle(&inst.graph);
        match locate_from_tuple(&inst.graph, tuple) {
            Ok(Some(h)) if Some(h.len()) == want => {}
            other => {
                failures.push(format!("{name}: locator gave {other:?}, oracle {want:?}"));
                continue;
            }
        }
        let trace = locate_traced(&inst.graph, tuple).unwrap();
        let len = |p: &Option<oddhole::Path>| p.as_ref().map(|p| p.len());
        let got = [len(&trace.q3), len(&trace.r2), len(&trace.c2), len(&trace.d2), len(&trace.s2)];
        let planted = [arcs.q3, arcs.r2, arcs.c2, arcs.d2, arcs.s2].map(Some);
        if got != planted {
            failures.push(format!("{name}: arcs (q3,r2,c2,d2,s2) {got:?}, planted {planted:?}"));
        }
    }
    outcome(&failures, format!("{count} planted pyramids with n <= {HINTED_MAX_N}, exact arc lengths"))
}

#[derive(Default)]
struct LemmaCounts {
    instances: usize,
    holes: usize,
    notbig: usize,
    notbig_major: usize,
    no_jewel: usize,
    no_jewel_big: usize,
    no_jewel_two_big: usize,
    no_five: usize,
    no_five_big: usize,
    pyramids: usize,
    pyramids_big: usize,
}

fn lemma_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut c = LemmaCounts::default();
    let mut i = 0u64;
    while c.instances < LEMMA_INSTANCES {
        let g = common::lemma_instance(i, LEMMA_MAX_N);
        i += 1;
        let holes = all_shortest_odd_holes(&g);
        if holes.is_empty() {
            continue;
        }
        c.instances += 1;
        let five = holes[0].len() == 5;
        let jewelled = holes.iter().any(|h| is_jewelled(&g, h));
        let mut fail = |lemma: &str, h: &Hole, e: String| {
            failures.push(format!("{lemma} on instance {}: {e} (hole {:?})", i - 1, h.vertices()))
        };
        for h in &holes {
            c.holes += 1;
            let big = big_majors(&g, h).len();
            if g.vertices().any(|v| !h.contains(v) && oddhole::structure::classify_major(&g, h, v).unwrap().is_major())
            {
                c.notbig_major += 1;
            }
            c.notbig += 1;
            if let Err(e) = check_not_big(&g, h) {
                fail("majors", h, e);
            }
            if jewelled {
                continue;
            }
            c.no_jewel += 1;
            c.no_jewel_big += (big > 0) as usize;
            c.no_jewel_two_big += (big > 1) as usize;
            if let Err(e) = check_even_major_paths(&g, h) {
                fail("even major paths", h, e);
            }
            if let Err(e) = check_stable_common_neighbor(&g, h) {
                fail("stable common neighbour", h, e);
            }
            if !five {
                c.no_five += 1;
                c.no_five_big += (big > 0) as usize;
                if let Err(e) = check_covering_edge(&g, h) {
                    fail("covering edge", h, e);
                }
            }
        }
        if !five && !jewelled {
            let pyramids = brute_find_pyramids(&g).unwrap();
            for w in optimal_great_pyramids(&pyramids, holes[0].len()) {
                c.pyramids += 1;
                let hole = Hole::new(&g, &w.hole_sequence()).unwrap();
                c.pyramids_big += !big_majors(&g, &hole).is_empty() as usize;
                if let Err(e) = check_pyramid_majors(&g, &w) {
                    failures.push(format!("pyramid majors on instance {}: {e}", i - 1));
                }
                for h in &holes {
                    if let Err(e) = check_no_short_shortcut(&g, h, w.height()) {
                        failures.push(format!("shortcut on instance {}: {e}", i - 1));
                    }
                }
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{} instances, {} shortest holes; majors checked on {} ({} with a major); \
             no-jewel checks on {} ({} with a big major, {} with two); covering edge on {} ({} with a big major); \
             {} optimal great pyramids ({} with a big major); {} violations",
            c.instances,
            c.holes,
            c.notbig,
            c.notbig_major,
            c.no_jewel,
            c.no_jewel_big,
            c.no_jewel_two_big,
            c.no_five,
            c.no_five_big,
            c.pyramids,
            c.pyramids_big,
            failures.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);
type Detector = (&'static str, fn(&Graph) -> Detection);

fn great_pyramid_full(g: &Graph) -> Detection {
    find_great_pyramid(g, &LocatorMode::Full { guard: FUZZ_MAX_N }).expect("within the guard")
}

const DETECTORS: [Detector; 7] = [
    ("five_hole", find_5hole),
    ("jewel", find_jewelled),
    ("test_clean", test_clean),
    ("test_cleanable", test_cleanable),
    ("no_heavy_clean", no_heavy_clean),
    ("no_great_pyramid", no_great_pyramid_solver),
    ("great_pyramid", great_pyramid_full),
];

fn fuzz_run(failures: &mut Vec<String>) -> (Vec<Vec<Detection>>, usize) {
    let mut all = Vec::new();
    let mut found = 0;
    for seed in 0..FUZZ_GRAPHS {
        let n = 5 + (seed as usize % (FUZZ_MAX_N - 4));
        let p = [0.2, 0.3, 0.4, 0.5, 0.6][(seed / 6) as usize % 5];
        let g = random_graph(n, p, 0xf022 + seed).unwrap();
        let mut row = Vec::new();
        for (name, detect) in DETECTORS {
            let d = std::panic::catch_unwind(|| detect(&g));
            let Ok(d) = d else {
                failures.push(format!("{name} panicked on seed {seed}"));
                row.push(Detection::Failure);
                continue;
            };
            if let Some(h) = d.hole() {
                found += 1;
                if let Err(e) = check_odd_hole(&g, h.vertices()) {
                    failures.push(format!("{name} on seed {seed}: {:?} {}", h.vertices(), e.reason()));
                }
                if d.length() != Some(h.vertices().len()) {
                    failures.push(format!("{name} on seed {seed}: length {:?} for {:?}", d.length(), h.vertices()));
                }
            }
            row.push(d);
        }
        all.push(row);
    }
    (all, found)
}

fn soundness_fuzz() -> Outcome {
    let mut failures = Vec::new();
    let (first, found) = fuzz_run(&mut failures);
    let mut again = Vec::new();
    let (second, _) = fuzz_run(&mut again);
    if first != second {
        let seed = first.iter().zip(&second).position(|(a, b)| a != b).unwrap();
        failures.push(format!("second run differs on seed {seed}"));
    }
    outcome(
        &failures,
        format!(
            "{FUZZ_GRAPHS} graphs with n <= {FUZZ_MAX_N}, {} detectors, {found} holes re-validated, two identical runs",
            DETECTORS.len()
        ),
    )
}

fn full_enumeration_smoke() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut slowest = Duration::ZERO;
    for (l1, l2, l3) in pyramid_shapes(SMOKE_MAX_N) {
        for ambient in 0..=SMOKE_MAX_N - (1 + l1 + l2 + l3) {
            let inst =
                generate(&InstanceSpec::new(Family::PlantedPyramid { l1, l2, l3, ambient }, ambient as u64)).unwrap();
            count += 1;
            let want = oracle(&inst.graph);
            let start = Instant::now();
            let got = find_great_pyramid(&inst.graph, &LocatorMode::Full { guard: SMOKE_MAX_N });
            let took = start.elapsed();
            slowest = slowest.max(took);
            let name = format!("({l1},{l2},{l3}) ambient {ambient}");
            match got {
                Ok(d) if d.length() == want => {}
                other => failures.push(format!("{name}: {other:?}, oracle {want:?}")),
            }
            if took > SMOKE_BUDGET {
                failures.push(format!("{name}: {took:?}"));
            }
        }
    }
    outcome(&failures, format!("{count} planted pyramids with n <= {SMOKE_MAX_N}, slowest {slowest:.2?}"))
}

fn performance() -> Outcome {
    let mut failures = Vec::new();
    let mut time = |name: &str, budget: Duration, f: &dyn Fn() -> Detection| {
        let start = Instant::now();
        f();
        let took = start.elapsed();
        if took > budget {
            failures.push(format!("{name} took {took:.2?}, budget {budget:?}"));
        }
        took
    };
    let g60 = random_graph(60, 0.2, 60).unwrap();
    let g40 = random_graph(40, 0.2, 40).unwrap();
    let g25 = random_graph(25, 0.2, 25).unwrap();
    let a = time("find_5hole n=60", FIVE_HOLE_BUDGET, &|| find_5hole(&g60));
    let b = time("find_jewelled n=40", JEWEL_BUDGET, &|| find_jewelled(&g40));
    let c = time("no_great_pyramid_solver n=25", CLEAN_BUDGET, &|| no_great_pyramid_solver(&g25));
    outcome(
        &failures,
        format!("find_5hole n=60 {a:.2?}, find_jewelled n=40 {b:.2?}, no_great_pyramid_solver n=25 {c:.2?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("oracle equivalence", oracle_equivalence),
        ("structured families", structured_families),
        ("hinted locator completeness", hinted_completeness),
        ("structural lemma suite", lemma_suite),
        ("soundness fuzzing", soundness_fuzz),
        ("full enumeration smoke", full_enumeration_smoke),
        ("performance budgets", performance),
    ];
    let mut all_pass = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all_pass &= o.pass;
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {name}: {verdict} ({}; {:.1?})", i + 1, o.detail, start.elapsed());
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
