use std::path::Path;
use std::process::{Command, Output};

use tourney_core::{EdgePartition, Tournament};

fn tourneycc(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tourneycc"))
        .args(args)
        .current_dir(dir)
        .env_remove("TOURNEYCC_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// Value of a `key: value` line.
fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

#[test]
fn gen_random_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for out in ["a", "b"] {
        let o = tourneycc(&["gen", "--type", "random", "--n", "16", "--seed", "7", "--out", out], dir.path());
        assert!(o.status.success());
    }
    let a = std::fs::read_to_string(dir.path().join("a.tour")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("b.tour")).unwrap();
    assert_eq!(a, b);
    assert_eq!(Tournament::parse_text(&a).unwrap(), Tournament::random(16, 7).unwrap());
}

#[test]
fn gssigma_king_run() {
    let dir = tempfile::tempdir().unwrap();
    let o = tourneycc(&["gen", "--type", "gssigma", "--n", "3", "--set", "1,2", "--sigma", "2,1,3", "--out", "g"], dir.path());
    assert!(o.status.success());
    let t = Tournament::parse_text(&std::fs::read_to_string(dir.path().join("g.tour")).unwrap()).unwrap();
    let p = EdgePartition::parse_text(&std::fs::read_to_string(dir.path().join("g.part")).unwrap()).unwrap();
    assert_eq!((t.n(), p.n()), (9, 9));

    let o = tourneycc(&["gen", "--type", "gssigma", "--n", "2", "--set", "1", "--sigma", "1,2", "--out", "h"], dir.path());
    assert!(o.status.success());
    let o = tourneycc(
        &["run", "--protocol", "king", "--tournament", "h.tour", "--partition", "h.part", "--dump-transcript"],
        dir.path(),
    );
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(["1", "3", "5"].contains(&field(&text, "output").as_str()), "{text}");
    let bits: usize = field(&text, "bits").parse().unwrap();
    let alice: usize = field(&text, "bits_alice").parse().unwrap();
    let bob: usize = field(&text, "bits_bob").parse().unwrap();
    assert_eq!(alice + bob, bits);
    assert!(text.lines().any(|l| l.starts_with(&format!("total,bits_alice={alice},bits_bob={bob}"))));
}

#[test]
fn src_on_three_cycle() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c.tour"), "3\n101\n").unwrap();
    std::fs::write(dir.path().join("c.part"), "3\nABA\n").unwrap();
    let o = tourneycc(&["run", "--protocol", "src", "--tournament", "c.tour", "--partition", "c.part"], dir.path());
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "output"), "0 (no source)");
}

#[test]
fn gt_and_maxsum() {
    let dir = tempfile::tempdir().unwrap();
    let o = tourneycc(&["run", "--protocol", "gt", "--x", "5", "--y", "3"], dir.path());
    assert_eq!(field(&stdout(&o), "output"), "1");
    let o = tourneycc(&["run", "--protocol", "maxsum-det", "--a", "3,1,2", "--b", "0,4,1"], dir.path());
    assert_eq!(field(&stdout(&o), "output"), "2");
    let o = tourneycc(&["run", "--protocol", "maxsum-rand", "--a", "3,1,2", "--b", "0,4,1", "--seed", "4"], dir.path());
    assert!(o.status.success());
}

#[test]
fn cis_run() {
    let dir = tempfile::tempdir().unwrap();
    // path 1-2-3-4
    std::fs::write(dir.path().join("p.graph"), "4\n100101\n").unwrap();
    let o = tourneycc(&["run", "--protocol", "cis", "--graph", "p.graph", "--clique", "2,3", "--indep", "1,3"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(field(&stdout(&o), "output"), "3");
}

#[test]
fn fooling_gen_has_unique_maximum() {
    let dir = tempfile::tempdir().unwrap();
    let o = tourneycc(&["gen", "--type", "fooling", "--n", "8", "--sigma-index", "0", "--out", "f"], dir.path());
    assert!(o.status.success());
    let t = Tournament::parse_text(&std::fs::read_to_string(dir.path().join("f.tour")).unwrap()).unwrap();
    assert_eq!(t.max_out_degree_set(), [1].into());
}

#[test]
fn sweep_csv_is_ordered_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["sweep", "--protocol", "src", "--n-min", "8", "--n-max", "32", "--trials", "3", "--seed", "5"];
    let a = stdout(&tourneycc(&args, dir.path()));
    let b = stdout(&tourneycc(&args, dir.path()));
    assert_eq!(a, b);
    let mut lines = a.lines();
    assert_eq!(lines.next(), Some("n,trial,seed,bits,correct"));
    let keys: Vec<(usize, usize)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f[4], "1");
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    assert_eq!(keys.len(), 9);
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let o = tourneycc(&["verify", "--suite", "gssigma", "--max-n", "4", "--trials", "0"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("n=4: 360 instances"));
    let o = tourneycc(&["verify", "--suite", "rank"], dir.path());
    assert!(stdout(&o).contains("n=3: 2, n=4: 3"));
    let o = tourneycc(&["verify", "--suite", "kings", "--max-n", "5"], dir.path());
    assert!(o.status.success());
}

#[test]
fn games() {
    let dir = tempfile::tempdir().unwrap();
    let o = tourneycc(&["rank-game", "--n", "6", "--delayer", "adversarial"], dir.path());
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(row.starts_with("6,alg3,adversarial,1,5.000,5,"), "{row}");
    let o = tourneycc(&["query-king", "--n", "32", "--trials", "10", "--seed", "2"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with(",10"));
}

#[test]
fn threads_env_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_tourneycc"))
        .args(["query-king", "--n", "16", "--trials", "4"])
        .env("TOURNEYCC_THREADS", "2")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(tourneycc(&["frobnicate"], dir.path()).status.code(), Some(2));
    let o = tourneycc(&["run", "--protocol", "king", "--tournament", "missing.tour", "--partition", "x"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    std::fs::write(dir.path().join("bad.tour"), "3\n10\n").unwrap();
    std::fs::write(dir.path().join("ok.part"), "3\nAAA\n").unwrap();
    let o = tourneycc(&["run", "--protocol", "king", "--tournament", "bad.tour", "--partition", "ok.part"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = tourneycc(&["gen", "--type", "gssigma", "--n", "3", "--set", "1"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = tourneycc(&["verify", "--suite", "nope"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}
