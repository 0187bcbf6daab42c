mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::*;
use lens_surgery::decide::{decide, Obtainable};
use lens_surgery::diagram::PlanarDiagram;
use lens_surgery::invariants::Budget;
use lens_surgery::report::decision_from_json;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lens-surgery")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn criterion_examples() {
    let o = run(&["criterion", "16", "7", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("psi=5 phi=0 value=-15 pass"));
    let o = run(&["criterion", "5", "1", "2"]);
    assert!(stdout(&o).contains("psi=2 phi=1 value=1 pass"));
    let o = run(&["criterion", "16", "7", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fail"));
    assert_eq!(run(&["criterion", "16", "8", "3"]).status.code(), Some(2));
    assert_eq!(run(&["criterion", "16", "7"]).status.code(), Some(2));
}

#[test]
fn decide_examples() {
    let o = run(&["decide", "5", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witnesses: [1, 2]"));
    assert_eq!(run(&["decide", "8", "3"]).status.code(), Some(1));
    let o = run(&["decide", "16", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = decision_from_json(&stdout(&o)).unwrap();
    assert_eq!(report.witnesses, vec![3, 5]);
    assert_eq!(run(&["decide", "5", "1", "--node-cap", "0"]).status.code(), Some(2));
}

#[test]
fn klein_examples() {
    let o = run(&["klein", "2", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("yes-set: {L(16,7), L(20,9)}"));
    assert!(stdout(&run(&["klein", "2", "2"])).contains("yes-set: {}"));
    assert!(stdout(&run(&["klein", "4", "4"])).contains("n=4 L(16,7) yes [3, 5]"));
    assert_eq!(run(&["klein", "5", "4"]).status.code(), Some(2));
    assert_eq!(run(&["klein", "1", "4"]).status.code(), Some(2));
}

#[test]
fn diagram_output_is_deterministic_pd() {
    let raw5 = stdout(&run(&["diagram", "5", "1", "--raw"]));
    assert!(raw5.starts_with("PD arcs=16 components=1\n"));
    assert_eq!(raw5, stdout(&run(&["diagram", "5", "1", "--raw"])));
    assert!(stdout(&run(&["diagram", "4", "1", "--raw"])).starts_with("PD arcs=12 components=2\n"));

    let smooth = PlanarDiagram::parse(&stdout(&run(&["diagram", "5", "1", "2", "--mode", "smoothing"]))).unwrap();
    let cross = PlanarDiagram::parse(&stdout(&run(&["diagram", "5", "1", "2", "--mode", "crossing-negative"]))).unwrap();
    let mut comps = [smooth.component_count(), cross.component_count()];
    comps.sort();
    assert_eq!(comps, [1, 2]);

    let path = scratch("diagram_5_1.pd");
    assert_eq!(run(&["diagram", "5", "1", "--raw", "-o", path.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), raw5);
    assert_eq!(run(&["diagram", "5", "1", "3"]).status.code(), Some(2));
}

#[test]
fn invariants_of_a_pd_file() {
    let path = scratch("figure_eight.pd");
    std::fs::write(&path, "PD arcs=8 components=1\nX[4,2,5,1]\nX[8,6,1,5]\nX[6,3,7,4]\nX[2,7,3,8]\n").unwrap();
    let o = run(&["invariants", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["determinant"], 5);
    assert_eq!(v["crossings"], 4);
    assert_eq!(v["triviality"]["verdict"], "nontrivial");

    let bad = scratch("bad.pd");
    std::fs::write(&bad, "PD arcs=2 components=1\nX[1,1,2]\n").unwrap();
    assert_eq!(run(&["invariants", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["invariants", "/nonexistent/file.pd"]).status.code(), Some(2));
}

#[test]
fn config_file_sets_format_and_flags_override_it() {
    let cfg = scratch("run.toml");
    std::fs::write(&cfg, "format = \"json\"\n[budget]\nnode_cap = 5000\nheadroom = 1\n").unwrap();
    let o = run(&["decide", "5", "1", "--config", cfg.to_str().unwrap()]);
    let r = decision_from_json(&stdout(&o)).unwrap();
    assert_eq!((r.budget.node_cap, r.budget.headroom), (5000, 1));
    let o = run(&["decide", "5", "1", "--config", cfg.to_str().unwrap(), "--node-cap", "7000"]);
    assert_eq!(decision_from_json(&stdout(&o)).unwrap().budget.node_cap, 7000);

    std::fs::write(&cfg, "[budget]\nheadroom = 99\n").unwrap();
    assert_eq!(run(&["decide", "5", "1", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn exit_codes_follow_the_report_on_random_lenses() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let p = rng.gen_range(2..=30);
        let q = loop {
            let q = rng.gen_range(1..p);
            if coprime(p, q) {
                break q;
            }
        };
        let o = run(&["decide", &p.to_string(), &q.to_string(), "--json"]);
        let cli = decision_from_json(&stdout(&o)).unwrap();
        let lib = decide(lp(p, q), &Budget::default()).unwrap();
        assert_eq!(cli, lib, "L({p},{q})");
        let expected = match lib.obtainable {
            Obtainable::Yes => 0,
            Obtainable::No => 1,
            Obtainable::Inconclusive => 3,
        };
        assert_eq!(o.status.code(), Some(expected), "L({p},{q})");
    }
}
