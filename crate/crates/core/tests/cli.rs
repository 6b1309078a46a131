use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_craiglat"));
    c.env_remove("CRAIGLAT_PRECISION");
    c
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("craiglat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .to_string()
}

#[test]
fn construct_round_trip() {
    for (n, m, l) in [("12", "3", "13"), ("20", "4", "23"), ("2", "1", "3")] {
        let path = scratch(&format!("a{n}_{m}_{l}.txt"));
        let p = path.to_str().unwrap();
        let made = stdout(&["construct", "--n", n, "--m", m, "--l", l, "--output", p]);
        let read = stdout(&["density", "--basis", p]);
        let formula = stdout(&["density", "--n", n, "--m", m, "--l", l]);
        let verified = stdout(&["verify", "--basis", p, "--bound", &(2 * m.parse::<u64>().unwrap()).to_string()]);
        let g = field(&made, "gram_det");
        assert_eq!(g, field(&read, "gram_det"));
        assert_eq!(g, field(&formula, "gram_det"));
        assert_eq!(g, field(&verified, "gram_det"));
        assert!(verified.contains("certificate holds"), "{verified}");
    }
}

#[test]
fn construct_small_basis() {
    assert_eq!(stdout(&["construct", "--n", "2", "--m", "1", "--l", "3"]), "3 2\n-1 1 0\n0 -1 1\n");
}

#[test]
fn precision_from_environment() {
    let out = bin()
        .env("CRAIGLAT_PRECISION", "7")
        .args(["density", "--n", "52", "--m", "6", "--l", "53", "--k", "1"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&text, "log2_delta").split('.').nth(1).unwrap().len(), 7);
    let d4 = field(&stdout(&["density", "--n", "52", "--m", "6", "--l", "53", "--k", "1"]), "log2_delta");
    assert!(d4.starts_with("10.70"), "{d4}");
}

#[test]
fn lift_from_generator_file() {
    let path = scratch("rep8.txt");
    std::fs::write(&path, "2 8 1\n1 1 1 1 1 1 1 1\n").unwrap();
    let out_basis = scratch("lift7.txt");
    let out = stdout(&[
        "lift", "--n", "7", "--m", "1", "--l", "11",
        "--code", path.to_str().unwrap(),
        "--output", out_basis.to_str().unwrap(),
    ]);
    assert!(out.contains("guarantee min_norm >= 8"), "{out}");
    let v = stdout(&["verify", "--basis", out_basis.to_str().unwrap()]);
    assert_eq!(field(&v, "min_norm"), "8");
}

#[test]
fn pipelines_and_reports() {
    let mw = stdout(&["mwbeat", "--p", "1667"]);
    assert!(mw.contains("stated_k 629"), "{mw}");
    let p24 = stdout(&["pipeline24", "--dim", "4104"]);
    assert!(p24.contains("params A_4104^(128,4111)"), "{p24}");
    let sw = stdout(&["sweep", "--dim", "150"]);
    assert!(sw.contains("log2_delta 114.0599"), "{sw}");
    let cond = stdout(&["conditional", "--n", "256", "--m", "12", "--l", "257", "--k", "56", "--d", "96"]);
    assert!(cond.contains("log2_delta 294.8105"), "{cond}");
    assert!(cond.contains("status open"), "{cond}");
    let csv = stdout(&["table", "--id", "2", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 16);
    let cmp = stdout(&["compare", "--dim", "52", "--m", "6", "--l", "53", "--k", "1"]);
    assert!(cmp.contains("verdict beats"), "{cmp}");
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["table", "--id", "7"]);
    let b = stdout(&["table", "--id", "7"]);
    assert_eq!(a, b);
}

#[test]
fn exit_statuses() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code().unwrap();
    assert_eq!(code(&["nonsense"]), 2);
    assert_eq!(code(&["gv", "--n", "10"]), 2);
    assert_eq!(code(&["verify", "--basis", "/nonexistent/basis.txt"]), 2);
    assert_eq!(code(&["construct", "--n", "700", "--m", "3", "--l", "701"]), 3);
    assert_eq!(code(&["gv", "--n", "10", "--d", "3"]), 0);
}
