//! Acceptance suite. Prints one PASS/FAIL line per criterion; run with
//! `cargo test -p zdlat-cli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zdlat::generate::{generate, Family, GenMult};
use zdlat::graph::{gamma_mult, gamma_order, SimpleGraph};
use zdlat::lattice::{bit, DEFAULT_DOWN_SET_CAP};
use zdlat::prime::{checks, minimal_prime_semi_ideals, CheckStatus};
use zdlat::ring::{analyze_ring, ideal_lattice_zn, is_squarefree, prime_factors};
use zdlat::solver::{
    brute_force_chromatic, brute_force_clique, chromatic_number, clique_number, BRUTE_FORCE_CAP,
};
use zdlat::{
    analyze, check_lemma_suite, fixtures, AnalysisOptions, Deadline, ElementSubset, MultLattice,
    Verdict,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    ensure!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    Ok(format!("{detail} ({} ms)", elapsed.as_millis()))
}

fn counterexample() -> Outcome {
    let ml = fixtures::fig3();
    ensure!(ml.len() == 14, "fixture has {} elements", ml.len());
    let l = ml.lattice();
    let f = l.index_of("f").unwrap();
    ensure!(!ml.is_reduced(), "fixture reported reduced");
    ensure!(ml.mul(f, f) == l.bottom(), "f·f is not zero");
    let r =
        analyze(&ml, "fig3", l.bottom(), &AnalysisOptions::default()).map_err(|e| e.to_string())?;
    let witness = r
        .nilpotent_witness
        .as_ref()
        .map(|w| (w.element.as_str(), w.exponent));
    ensure!(witness == Some(("f", 2)), "nilpotent witness {witness:?}");
    ensure!(r.vertices == 12, "{} vertices", r.vertices);
    ensure!(
        (r.chi, r.omega) == (4, 3),
        "chi={} omega={}",
        r.chi,
        r.omega
    );
    ensure!(r.verdict == Verdict::Fails, "verdict {:?}", r.verdict);
    Ok("fig3: 12 vertices, chi=4, omega=3, f^2=0".into())
}

fn fig2_graphs() -> Outcome {
    let ml = fixtures::fig2();
    let l = ml.lattice();
    let order =
        gamma_order(l, &ElementSubset::new(l, bit(l.bottom()))).map_err(|e| e.to_string())?;
    let names = |xs: Vec<(usize, usize)>| -> Vec<String> {
        xs.into_iter()
            .map(|(x, y)| format!("{}-{}", l.name(x), l.name(y)))
            .collect()
    };
    let vertices: Vec<&str> = order.vertices().iter().map(|&x| l.name(x)).collect();
    ensure!(vertices == ["a", "b", "c"], "order vertices {vertices:?}");
    let edges = names(order.element_edges());
    ensure!(edges == ["a-c", "b-c"], "order edges {edges:?}");
    let mult = gamma_mult(&ml, l.bottom());
    let vertices: Vec<&str> = mult.vertices().iter().map(|&x| l.name(x)).collect();
    ensure!(
        vertices == ["a", "b", "c", "d"],
        "mult vertices {vertices:?}"
    );
    ensure!(
        mult.graph() == &SimpleGraph::complete(4),
        "mult graph is not K4"
    );
    let (chi, _) = chromatic_number(mult.graph());
    let (omega, _) = clique_number(mult.graph());
    ensure!((chi, omega) == (4, 4), "chi={chi} omega={omega}");
    Ok("order graph a-c, b-c; mult graph K4 with chi=omega=4".into())
}

/// Reduced instances named in the suite: boolean lattices, squarefree divisor
/// lattices under both products and seeded random distributive lattices.
fn reduced_instances() -> Vec<(String, MultLattice)> {
    let mut out = Vec::new();
    for k in 1..=5 {
        out.push((
            format!("boolean:{k}"),
            generate(Family::Boolean(k), GenMult::Meet).unwrap(),
        ));
    }
    for n in (2..=1000u64).filter(|&n| is_squarefree(n)) {
        for mult in [GenMult::Default, GenMult::Meet] {
            let name = format!("divisor:{n}/{mult:?}");
            out.push((name, generate(Family::Divisor(n), mult).unwrap()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let seed = rng.gen();
        let family = Family::RandomDistributive { seed, size: 24 };
        out.push((family.to_string(), generate(family, GenMult::Meet).unwrap()));
    }
    out
}

fn reduced_suite(instances: &[(String, MultLattice)]) -> Outcome {
    let options = AnalysisOptions::default();
    for (name, ml) in instances {
        ensure!(ml.is_reduced(), "{name} is not reduced");
        let l = ml.lattice();
        let r = analyze(ml, name, l.bottom(), &options).map_err(|e| format!("{name}: {e}"))?;
        let primes = ml.minimal_prime_elements().len();
        let semi = minimal_prime_semi_ideals(l, DEFAULT_DOWN_SET_CAP)
            .map_err(|e| format!("{name}: {e}"))?
            .len();
        if r.vertices == 0 {
            ensure!(
                (r.chi, r.omega) == (0, 0),
                "{name}: empty graph with chi={}",
                r.chi
            );
            ensure!(
                primes == semi,
                "{name}: {primes} primes vs {semi} semi-ideals"
            );
        } else {
            ensure!(
                r.chi == r.omega && r.omega == primes && primes == semi,
                "{name}: chi={} omega={} primes={primes} semi-ideals={semi}",
                r.chi,
                r.omega
            );
        }
    }
    Ok(format!("{} reduced instances", instances.len()))
}

fn ring_prime_counts() -> Outcome {
    let options = AnalysisOptions::default();
    let mut count = 0;
    for n in (2..=1000u64).filter(|&n| is_squarefree(n)) {
        let r = analyze_ring(n, &options).map_err(|e| e.to_string())?;
        let k = prime_factors(n).len();
        // A field has no nonzero proper ideals, so its graph is empty.
        let expected = if k == 1 { 0 } else { k };
        ensure!(
            (r.chi, r.omega) == (expected, expected) && r.minimal_prime_element_count == k,
            "Z_{n}: chi={} omega={} expected {expected}",
            r.chi,
            r.omega
        );
        count += 1;
    }
    for (n, k) in [(6, 2), (30, 3), (210, 4), (2310, 5)] {
        let r = analyze_ring(n, &options).map_err(|e| e.to_string())?;
        ensure!(
            (r.chi, r.omega) == (k, k),
            "Z_{n}: chi={} omega={}",
            r.chi,
            r.omega
        );
    }
    Ok(format!(
        "{count} squarefree moduli (primes give empty graphs); 6,30,210,2310 -> 2,3,4,5"
    ))
}

fn lemma_suite(instances: &[(String, MultLattice)]) -> Outcome {
    for (name, ml) in instances {
        let report = check_lemma_suite(ml, DEFAULT_DOWN_SET_CAP, &Deadline::none());
        if let Some(bad) = report.failures().next() {
            return Err(format!(
                "{name}: {} {:?}: {}",
                bad.id, bad.status, bad.detail
            ));
        }
        let skipped = report.count(CheckStatus::Skipped);
        ensure!(skipped == 0, "{name}: {skipped} checks skipped");
        let acc = report
            .get(checks::ANNIHILATOR_ACC)
            .ok_or("missing ACC check")?;
        ensure!(
            acc.status == CheckStatus::Trivial && acc.detail == "trivial (finite)",
            "{name}: ACC check reported {:?} `{}`",
            acc.status,
            acc.detail
        );
    }
    Ok(format!("all checks pass on {} instances", instances.len()))
}

fn random_graph(rng: &mut ChaCha8Rng, p: f64) -> SimpleGraph {
    let n = rng.gen_range(1..=BRUTE_FORCE_CAP);
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut graphs: Vec<SimpleGraph> = (0..252)
        .map(|i| random_graph(&mut rng, [0.2, 0.5, 0.8][i % 3]))
        .collect();
    graphs.push(gamma_mult(&fixtures::fig3(), 0).graph().clone());
    for (i, g) in graphs.iter().enumerate() {
        let (chi, coloring) = chromatic_number(g);
        let (omega, clique) = clique_number(g);
        let bf_chi = brute_force_chromatic(g, BRUTE_FORCE_CAP).map_err(|e| e.to_string())?;
        let bf_omega = brute_force_clique(g, BRUTE_FORCE_CAP).map_err(|e| e.to_string())?;
        ensure!(
            (chi, omega) == (bf_chi, bf_omega),
            "graph {i}: solver ({chi},{omega}) vs oracle ({bf_chi},{bf_omega})"
        );
        ensure!(coloring.is_proper(g), "graph {i}: improper coloring");
        ensure!(
            g.is_clique(clique.mask()) && clique.len() == omega,
            "graph {i}: bad clique"
        );
    }
    let fig3 = graphs.last().unwrap();
    let values = (chromatic_number(fig3).0, clique_number(fig3).0);
    ensure!(values == (4, 3), "fig3 graph {values:?}");
    Ok(format!("{} graphs including fig3", graphs.len()))
}

fn structural_flags(instances: &[(String, MultLattice)]) -> Outcome {
    let fig3 = fixtures::fig3();
    let l = fig3.lattice();
    ensure!(!l.is_modular(), "fig3 reported modular");
    let w = l.modularity_witness().ok_or("no pentagon witness")?;
    let five = [w.bottom, w.low, w.high, w.side, w.top];
    ensure!(
        l.leq(w.low, w.high)
            && w.low != w.high
            && l.meet(w.side, w.high) == w.bottom
            && l.join(w.side, w.low) == w.top
            && !l.leq(w.side, w.high)
            && !l.leq(w.low, w.side),
        "witness {five:?} is not a pentagon"
    );
    for n in 2..=1000 {
        let zn = ideal_lattice_zn(n).map_err(|e| e.to_string())?;
        ensure!(
            zn.embedded.lattice().is_modular(),
            "Id(Z_{n}) reported non-modular"
        );
    }
    for (name, ml) in instances {
        ensure!(
            ml.lattice().is_zero_distributive(),
            "{name} not 0-distributive"
        );
    }
    Ok(format!(
        "fig3 pentagon {}<{}<{} side {}; Id(Z_n) modular for n<=1000",
        l.name(w.bottom),
        l.name(w.low),
        l.name(w.high),
        l.name(w.side)
    ))
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    Command::new(env!("CARGO_BIN_EXE_zdlat"))
        .args(args)
        .output()
        .expect("binary runs")
        .stdout
}

fn determinism() -> Outcome {
    let cases: [&[&str]; 4] = [
        &["analyze", "--fixture", "fig3"],
        &["analyze", "--fixture", "fig2", "--mult", "trivial"],
        &["ring", "--modulus", "210"],
        &[
            "search",
            "--families",
            "boolean:1..5,divisor:2..200,random:40x20,fig2,fig3",
            "--seed",
            "9",
            "--budget",
            "400",
        ],
    ];
    for args in cases {
        let a = run_cli(args);
        let b = run_cli(args);
        ensure!(!a.is_empty(), "`{}` printed nothing", args.join(" "));
        ensure!(a == b, "`{}` differs between runs", args.join(" "));
    }
    Ok("analyze, ring and search output byte-identical across runs".into())
}

#[test]
fn acceptance() {
    let instances = reduced_instances();
    let secs = Duration::from_secs;
    let results: Vec<(u32, &str, Outcome)> = vec![
        (
            1,
            "counterexample reproduction",
            timed(secs(1), counterexample),
        ),
        (2, "fig2 reproduction", timed(secs(1), fig2_graphs)),
        (
            3,
            "reduced instances suite",
            timed(secs(300), || reduced_suite(&instances)),
        ),
        (4, "ring prime counts", timed(secs(120), ring_prime_counts)),
        (5, "lemma suite", lemma_suite(&instances)),
        (6, "solver oracle equivalence", timed(secs(120), oracle)),
        (7, "structural flags", structural_flags(&instances)),
        (8, "determinism", determinism()),
    ];
    let mut failed = Vec::new();
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id} PASS {name}: {detail}"),
            Err(why) => {
                println!("criterion {id} FAIL {name}: {why}");
                failed.push(*id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
