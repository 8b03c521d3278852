use std::path::Path;
use std::process::Command;

use absperm::codegen::{dumbbell, example_h422, random_regular_ldpc, random_tree, remove_four_cycles, LdpcSpec};
use absperm::BinaryMatrix;
use absperm_cli::formats::{parse_alist, parse_dense, write_alist, write_dense};
use proptest::prelude::*;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_absperm"))
}

fn run(args: &[&str], dir: &Path) -> (i32, String, String) {
    let out = bin().args(args).current_dir(dir).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn matrix() -> impl Strategy<Value = BinaryMatrix> {
    (1usize..8, 1usize..10).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(0u8..=1, n), m).prop_map(|r| BinaryMatrix::from_rows(&r).unwrap())
    })
}

proptest! {
    #[test]
    fn alist_round_trip(h in matrix()) {
        let text = write_alist(&h);
        prop_assert_eq!(parse_alist(&text).unwrap(), h.clone());
        prop_assert_eq!(write_alist(&parse_alist(&text).unwrap()), text);
    }

    #[test]
    fn dense_round_trip(h in matrix()) {
        let text = write_dense(&h);
        prop_assert_eq!(parse_dense(&text).unwrap(), h.clone());
        prop_assert_eq!(write_dense(&parse_dense(&text).unwrap()), text);
    }
}

#[test]
fn generator_outputs_round_trip() {
    let mut outputs = vec![example_h422()];
    outputs.extend((3..=8).map(|k| dumbbell(k).unwrap()));
    for seed in 0..5 {
        let h = random_regular_ldpc(&LdpcSpec { n: 20, dv: 3, dc: 4, seed }).unwrap();
        outputs.push(remove_four_cycles(&h, seed, 100_000).matrix);
        outputs.push(h);
        outputs.push(random_tree(12, 7, seed).unwrap());
    }
    for h in outputs {
        assert_eq!(parse_alist(&write_alist(&h)).unwrap(), h);
        assert_eq!(parse_dense(&write_dense(&h)).unwrap(), h);
    }
}

#[test]
fn generate_then_compute() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(&["generate", "h422", "--out", "h"], dir.path());
    assert_eq!(code, 0);
    let (code, stdout, _) = run(&["compute", "-m", "h.alist", "--kind", "absdet", "--dedupe"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "vector,count,is_unscaled_pcw,pseudo_weight,is_zero\n\
         \"0 1 1 0\",2,true,2.000000000000,false\n\
         \"1 1 0 1\",1,true,3.000000000000,false\n\
         \"1 0 1 1\",1,true,3.000000000000,false\n"
    );
}

#[test]
fn same_seed_gives_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    for prefix in ["a", "b"] {
        let args = ["generate", "regular", "--n", "20", "--dv", "3", "--dc", "4", "--seed", "17", "--out", prefix];
        assert_eq!(run(&args, dir.path()).0, 0);
    }
    for ext in ["alist", "txt"] {
        let a = std::fs::read(dir.path().join(format!("a.{ext}"))).unwrap();
        let b = std::fs::read(dir.path().join(format!("b.{ext}"))).unwrap();
        assert_eq!(a, b);
    }
    let h = parse_dense(&std::fs::read_to_string(dir.path().join("a.txt")).unwrap()).unwrap();
    assert_eq!((h.rows(), h.cols()), (15, 20));
}

#[test]
fn output_file_and_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("d.txt"), write_dense(&dumbbell(3).unwrap())).unwrap();
    std::fs::write(dir.path().join("r.txt"), write_dense(&random_tree(10, 6, 2).unwrap())).unwrap();
    for m in ["d.txt", "r.txt"] {
        let mut outputs = Vec::new();
        for threads in ["1", "3", "8"] {
            let out = format!("{m}.{threads}.csv");
            let args = ["compute", "-m", m, "--kind", "perm", "--minimal", "--threads", threads, "--out", &out];
            assert_eq!(run(&args, dir.path()).0, 0);
            outputs.push(std::fs::read(dir.path().join(out)).unwrap());
        }
        assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn histogram_reads_compute_csv() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("h.txt"), "1 1 1 0\n0 1 1 1\n").unwrap();
    let args = ["compute", "-m", "h.txt", "--kind", "perm", "--out", "p.csv"];
    assert_eq!(run(&args, dir.path()).0, 0);
    let (code, from_csv, _) = run(&["histogram", "-m", "p.csv", "--edges", "2,2.5,3"], dir.path());
    assert_eq!(code, 0);
    let (_, direct, _) = run(&["histogram", "-m", "h.txt", "--kind", "perm", "--edges", "2,2.5,3"], dir.path());
    assert_eq!(from_csv, direct);
    assert_eq!(direct, "# zero_count=0 total=4\nedge,cumulative_count\n2,0\n2.5,0\n3,4\n");
    // the 2.666.. weights land in the last bin
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("h.txt"), "1 1 1 0\n0 1 1 1\n").unwrap();
    std::fs::write(dir.path().join("bad.alist"), "4 2\n2 3\n1 2 2 1\n").unwrap();

    assert_eq!(run(&["compute", "-m", "h.txt"], dir.path()).0, 1);
    assert_eq!(run(&["compute", "-m", "h.txt", "--kind", "det", "--subset", "0,1"], dir.path()).0, 1);
    let (code, _, err) = run(&["compute", "-m", "bad.alist", "--kind", "det"], dir.path());
    assert_eq!(code, 1);
    assert!(err.contains("line 4") && err.contains("row-degree line"), "{err}");
    assert_eq!(run(&["gaussian", "-m", "h.txt", "--subset", "0,1,2", "--eps", "0.1,0.2"], dir.path()).0, 1);

    // a schedule that stops early misses the tolerance: contract failure
    let (code, stdout, _) = run(&["gaussian", "-m", "h.txt", "--subset", "0,1,2", "--eps", "0.5"], dir.path());
    assert_eq!(code, 2);
    assert!(stdout.starts_with("i,epsilon,product,target,relative_error\n"));

    let args = ["generate", "regular", "--n", "20", "--dv", "3", "--dc", "4", "--seed", "3", "--out", "r"];
    assert_eq!(run(&args, dir.path()).0, 0);
    let (code, _, err) = run(&["generate", "decycle", "-m", "r.alist", "--max-iters", "2", "--out", "d"], dir.path());
    assert_eq!(code, 3, "{err}");
    assert!(dir.path().join("d.alist").exists());
    let (code, _, _) = run(&["generate", "decycle", "-m", "r.alist", "--seed", "5", "--out", "d"], dir.path());
    assert_eq!(code, 0);
}

#[test]
fn check_reports() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("h.txt"), "1 1 1 0\n0 1 1 1\n").unwrap();
    let (code, stdout, _) = run(&["check", "-m", "h.txt", "--vector", "2,1,1,0"], dir.path());
    assert_eq!(code, 0);
    assert!(stdout.contains("member: true") && stdout.contains("minimal: true"));
    let (_, stdout, _) = run(&["check", "-m", "h.txt", "--vector", "3 1 1 0", "--format", "csv"], dir.path());
    assert!(stdout.contains("parity(j=0,i=0)"));
    assert_eq!(run(&["check", "-m", "h.txt", "--vector", "1 1"], dir.path()).0, 1);
}
