use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const DOMINO: &str = "{{{1,1},{2,2}},{{2,1},{3,2}}}";
const L_TROMINO: &str = "{{{1,1},{2,2}},{{2,1},{3,2}},{{1,2},{2,3}}}";

fn polyrook(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polyrook"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts_and_lists() {
    assert_eq!(
        stdout(&polyrook(
            &["enumerate", "--kind", "polyomino", "--rank", "5", "--count-only"],
            None
        )),
        "12\n"
    );
    assert_eq!(
        stdout(&polyrook(
            &["enumerate", "--kind", "collection", "--rank", "3", "--count-only"],
            None
        )),
        "5\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.txt");
    let o = polyrook(
        &[
            "enumerate",
            "--kind",
            "polyomino",
            "--rank",
            "3",
            "--out",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(stdout(&o), "");
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().any(|l| l == L_TROMINO));
}

#[test]
fn per_shape_commands_print_one_line_each() {
    let input = format!("{DOMINO}\n{L_TROMINO}\n");
    let rook = stdout(&polyrook(
        &["rook", "--input", "-", "--polynomial", "--number"],
        Some(&input),
    ));
    assert_eq!(rook, format!("{DOMINO}\t1,2\t1\n{L_TROMINO}\t1,3,1\t2\n"));

    let switch = stdout(&polyrook(&["switch", "--input", "-"], Some(&input)));
    assert_eq!(switch, format!("{DOMINO}\t1,2\t1\n{L_TROMINO}\t1,3,1\t2\n"));

    let hpoly = stdout(&polyrook(&["hpoly", "--input", "-", "--order", "lex"], Some(&input)));
    assert_eq!(hpoly, format!("{DOMINO}\t1,2\t4\t1\n{L_TROMINO}\t1,3,1\t5\t2\n"));

    let convex = stdout(&polyrook(&["convex-h", "--input", "-"], Some(&input)));
    assert_eq!(
        convex,
        format!("{DOMINO}\t1,2\tcertified\n{L_TROMINO}\t1,3,1\tcertified\n")
    );
}

#[test]
fn ideal_output() {
    let basis = stdout(&polyrook(&["ideal", "--input", "-", "--order", "rev"], Some(DOMINO)));
    let (shape, body) = basis.trim_end().split_once('\t').unwrap();
    assert_eq!(shape, DOMINO);
    assert_eq!(body.split(", ").count(), 3);
    assert!(body.contains("x(1,2)*x(2,1) - x(1,1)*x(2,2)"));

    let initial = stdout(&polyrook(
        &["ideal", "--input", "-", "--order", "rev", "--initial"],
        Some(DOMINO),
    ));
    assert_eq!(initial.trim_end().split_once('\t').unwrap().1.split(", ").count(), 3);

    let sharp = stdout(&polyrook(
        &["ideal", "--input", "-", "--order", "lex", "--sharp"],
        Some(DOMINO),
    ));
    assert_eq!(sharp, format!("{DOMINO}\ttrue\n"));

    let both = polyrook(
        &["ideal", "--input", "-", "--order", "rev", "--sharp", "--initial"],
        Some(DOMINO),
    );
    assert!(!both.status.success());
}

#[test]
fn verify_reports_ok() {
    let o = polyrook(&["verify", "--kind", "polyomino", "--rank", "5", "--jobs", "2"], None);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12 + 2);
    assert!(lines[..12].iter().all(|l| l.split('\t').count() == 13));
    assert_eq!(*lines.last().unwrap(), "OK 12");
}

#[test]
fn budget_then_resume() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("cp.json");
    let report = dir.path().join("report.tsv");
    let (cp_s, report_s) = (cp.to_str().unwrap(), report.to_str().unwrap());
    let common = ["verify", "--kind", "collection", "--rank", "5", "--report", report_s];

    let mut args = common.to_vec();
    args.extend(["--checkpoint", cp_s, "--max-seconds", "0"]);
    let first = polyrook(&args, None);
    assert_eq!(first.status.code(), Some(3));
    assert!(cp.exists());
    assert!(String::from_utf8_lossy(&first.stderr).contains("--resume"));

    let mut args = common.to_vec();
    args.extend(["--resume", cp_s]);
    let second = polyrook(&args, None);
    assert_eq!(
        second.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&second.stderr)
    );

    let text = std::fs::read_to_string(&report).unwrap();
    let records = text.lines().filter(|l| !l.starts_with('#') && l.contains('\t')).count();
    assert_eq!(records, 94);
    assert!(text.lines().last().unwrap().starts_with("OK "));
}

#[test]
fn malformed_dataset_names_the_line() {
    let input = format!("{DOMINO}\n{L_TROMINO}\n{{{{1,1}}\n");
    let o = polyrook(&["rook", "--input", "-"], Some(&input));
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains(":3:"), "{err}");
}

#[test]
fn dataset_of_the_wrong_rank_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.txt");
    std::fs::write(&path, format!("{L_TROMINO}\n")).unwrap();
    let o = polyrook(
        &[
            "verify",
            "--kind",
            "polyomino",
            "--rank",
            "2",
            "--dataset",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(Path::new(&path).exists());
}
