//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use multloop_core::liealg::{catalog, Subspace};
use multloop_core::loopcore::{bijectivity_witness, functional_residual, seeded_pairs, Bijectivity};
use multloop_core::exprdsl::parse;
use multloop_core::report::Report;
use multloop_core::sampling::DEFAULT_SEED;
use multloop_core::verify::{run_target, RunConfig};

struct Verdict {
    ok: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { ok: true, notes: Vec::new() }
    }

    fn require(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(what.into());
        }
    }

    fn within(&mut self, started: Instant, limit: Duration) {
        let t = started.elapsed();
        self.require(t < limit, format!("runtime {:.2}s over {:.0}s", t.as_secs_f64(), limit.as_secs_f64()));
    }
}

fn reports(target: &str) -> Vec<Report> {
    run_target(target, &RunConfig::default()).unwrap_or_else(|e| panic!("{target}: {e}"))
}

fn failing(r: &[Report]) -> Vec<String> {
    r.iter()
        .filter(|r| !r.matched())
        .map(|r| {
            let rank = r.witness("rank").map(|w| format!(" rank {}", w.values[0])).unwrap_or_default();
            format!("{}:{} residual {:.3e}{rank}", r.check, r.case, r.max_residual)
        })
        .collect()
}

fn exact_algebra() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    let r = reports("algebra:all");
    v.require(r.iter().filter(|r| r.check == "lie_axioms").all(|r| r.passed && r.max_residual == 0.0), "axioms");
    v.require(catalog::filiform(4).nilpotency_class() == Some(3), "F4 class");
    let l2 = catalog::l2();
    v.require(l2.is_solvable() && !l2.is_nilpotent(), "l2 solvable, not nilpotent");
    v.require(catalog::mult2().center() == Subspace::coordinate(5, &[5]).unwrap(), "center of mult2");
    v.within(t, Duration::from_secs(1));
    v
}

fn group_laws() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    let r = run_target("group:all", &RunConfig { samples: Some(1000), ..RunConfig::default() }).unwrap();
    v.require(r.len() >= 30, "law count");
    for f in failing(&r) {
        v.require(false, f);
    }
    v.require(r.iter().filter(|r| r.check == "group_axioms").all(|r| r.max_residual < 1e-9), "residual");
    v.within(t, Duration::from_secs(5));
    v
}

fn kepka_positive() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    for i in 1..=8 {
        let r = reports(&format!("kepka:case{i}"));
        v.require(r.iter().any(|r| r.check == "generation"), format!("case{i} has no generation report"));
        for f in failing(&r) {
            v.require(false, f);
        }
    }
    v.within(t, Duration::from_secs(10));
    v
}

fn negative_results() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    let cor = reports("niemenmaa:cor4");
    let dims = |label: &str| cor[0].witness(label).map(|w| w.values[0]);
    v.require(!cor[0].passed && dims("normalizer_dim") == Some(3.0) && dims("inn_plus_center_dim") == Some(2.0), "cor4");
    let obs = reports("obstruction:all");
    for r in obs.iter().filter(|r| !r.case.starts_with("OBS-SINCOS") && !r.case.starts_with("OBS-4DIM")) {
        v.require(r.passed && r.max_residual >= 0.01, format!("{} residual {:.3e}", r.case, r.max_residual));
    }
    let exp_m = obs.iter().find(|r| r.case == "OBS-EXP-M").unwrap();
    v.require(exp_m.max_residual >= 0.2, "OBS-EXP-M below 0.2");
    for r in obs.iter().filter(|r| r.case.starts_with("OBS-SINCOS") || r.case.starts_with("OBS-4DIM")) {
        let rank = r.witness("rank").unwrap().values[0];
        v.require(r.passed, format!("{} rank {rank}", r.case));
    }
    v.within(t, Duration::from_secs(5));
    v
}

fn loops() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    let sq = reports("loop:family_a:f=z^2");
    let get = |r: &[Report], c: &str| r.iter().find(|r| r.check == c).cloned().unwrap();
    v.require(get(&sq, "axioms").max_residual < 1e-8, "z^2 axioms");
    v.require(get(&sq, "associativity").max_residual > 0.1, "z^2 properness");
    let c2 = get(&sq, "class_two");
    v.require(c2.passed, format!("z^2 class two residual {:.3e}", c2.max_residual));
    let lin = reports("loop:family_a:f=z");
    v.require(get(&lin, "associativity").max_residual < 1e-8, "z associators");
    let sec = reports("loop:section:case1");
    v.require(get(&sec, "axioms").passed, "section axioms");
    v.require(get(&sec, "class_two").passed, "section class two");
    v.within(t, Duration::from_secs(10));
    v
}

fn functional_lemma() -> Verdict {
    let mut v = Verdict::new();
    let t = Instant::now();
    let pairs = seeded_pairs(DEFAULT_SEED, "acceptance:functional", 200, 2.0);
    for c in ["-2", "0", "3"] {
        let fit = functional_residual(&parse(&format!("{c}*(1 - exp(-z))")).unwrap(), &pairs).unwrap();
        v.require(fit.max_residual < 1e-12, format!("c = {c}: {:.3e}", fit.max_residual));
    }
    let lin = functional_residual(&parse("z").unwrap(), &pairs).unwrap();
    v.require(lin.max_residual >= 0.1, "f = z residual");
    let w = bijectivity_witness(&parse("z^2").unwrap()).unwrap();
    v.require(
        matches!(w, Bijectivity::Witness { u, z1, z2, .. } if u == 1.0 && z1 == 0.0 && z2 == -1.0),
        format!("witness {w:?}"),
    );
    v.within(t, Duration::from_secs(1));
    v
}

fn determinism() -> Verdict {
    let mut v = Verdict::new();
    let dir = std::env::temp_dir().join(format!("multloop-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut docs = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_multloop"))
            .env_remove("MULTLOOP_SEED")
            .args(["verify", "repro:all", "--seed", "1", "--json"])
            .arg(&path)
            .output()
            .unwrap()
            .status;
        v.require(status.code().is_some(), "process crashed");
        docs.push(std::fs::read(&path).unwrap_or_default());
    }
    let _ = std::fs::remove_dir_all(&dir);
    v.require(!docs[0].is_empty(), "empty document");
    v.require(docs[0] == docs[1], "documents differ");
    v
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 7] = [
        ("exact algebra suite", exact_algebra),
        ("group-law suite", group_laws),
        ("positive transversal suite", kepka_positive),
        ("negative-results suite", negative_results),
        ("loop suite", loops),
        ("functional-equation lemma", functional_lemma),
        ("determinism", determinism),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        all &= v.ok;
        let status = if v.ok { "PASS" } else { "FAIL" };
        if v.notes.is_empty() {
            println!("criterion {} {name}: {status}", i + 1);
        } else {
            println!("criterion {} {name}: {status} [{}]", i + 1, v.notes.join("; "));
        }
    }
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
