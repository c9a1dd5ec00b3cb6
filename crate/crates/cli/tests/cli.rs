use std::fs;
use std::process::{Command, Output};

use num_complex::Complex64;

fn bcpw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bcpw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(o: &Output) -> Vec<Vec<String>> {
    let mut r = csv::ReaderBuilder::new().from_reader(o.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_string).collect())
        .collect()
}

#[test]
fn plancherel_example() {
    let o = bcpw(&["verify", "--suite", "plancherel", "--density", "exp_decay", "--n", "4096", "--T", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = rows(&o);
    let norm = rows.iter().find(|r| r[1].contains("‖F‖²")).unwrap();
    let hat = rows.iter().find(|r| r[1].contains("normalized")).unwrap();
    for row in [norm, hat] {
        for v in &row[2..4] {
            assert!((v.parse::<f64>().unwrap() - 1.0).abs() < 1e-6, "{row:?}");
        }
    }
}

#[test]
fn decompose_j() {
    let o = bcpw(&["decompose", "--z", "0,0,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("beta1 = 0-1i"), "{text}");
    assert!(text.contains("beta2 = 0+1i"), "{text}");
    let text_form = stdout(&bcpw(&["decompose", "--z", "1 - 2 i + 0.5 j + 3 k"]));
    assert!(text_form.contains("beta1 = 4-2.5i"), "{text_form}");
    assert!(text_form.contains("beta2 = -2-1.5i"), "{text_form}");
}

#[test]
fn zero_density_passes_every_suite_with_zero_rows() {
    let o = bcpw(&["verify", "--suite", "all", "--density", "zero"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = rows(&o);
    assert!(rows.len() > 20);
    for row in rows.iter().filter(|r| !r[0].starts_with("algebra")) {
        assert_eq!(row[5], "true", "{row:?}");
        assert_eq!(row[2].parse::<f64>().unwrap(), 0.0, "{row:?}");
        assert_eq!(row[3].parse::<f64>().unwrap(), 0.0, "{row:?}");
    }
}

#[test]
fn check_failure_exits_one() {
    // The transform of a jump decays like 1/w, so the frequency tail beyond
    // the default reach exceeds the Plancherel tolerance.
    let o = bcpw(&["verify", "--suite", "plancherel", "--density", "indicator(2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("failed"));
}

#[test]
fn config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("f.csv");
    fs::write(&csv, "t1,f1_re,f1_im,t2,f2_re,f2_im\n").unwrap();
    let csv = csv.to_str().unwrap();
    for args in [
        vec!["verify", "--density", "zero", "--csv", csv],
        vec!["verify", "--n", "0"],
        vec!["verify", "--T", "-3"],
        vec!["verify", "--suite", "everything"],
        vec!["transform", "--density", "lorentzian"],
        vec!["decompose", "--z", "1,2,3"],
        vec!["extend", "--z", "0,0.5,1,0"],
        vec!["no-such-command"],
        vec![],
    ] {
        let o = bcpw(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"command": "verify", "grid_size": 3}"#).unwrap();
    assert_eq!(bcpw(&["--config", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn config_file_supplies_command_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    fs::write(&path, r#"{"command": "verify", "suite": "plancherel", "density": "indicator(2)"}"#).unwrap();
    let p = path.to_str().unwrap();
    // From the file alone the run fails its checks.
    assert_eq!(bcpw(&["--config", p]).status.code(), Some(1));
    // Flags override the suite and the density.
    let o = bcpw(&["--config", p, "verify", "--suite", "ray", "--density", "exp_decay"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(rows(&o).iter().all(|r| r[0] == "ray"));
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, seed: &str| {
        let out = dir.path().join(name);
        let o = bcpw(&["verify", "--suite", "algebra", "--seed", seed, "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        fs::read(out).unwrap()
    };
    let a = run("a.csv", "7");
    assert_eq!(a, run("b.csv", "7"));
    assert_ne!(a, run("c.csv", "8"));
}

#[test]
fn transform_matches_closed_form() {
    let o = bcpw(&["transform", "--convention", "unnormalized", "--z", "1,0,0,0", "--z", "0,0,0,2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = rows(&o);
    // 2/(1+z²) at z = 1 on both components, and at (2, -2) for 2k.
    let expect = [(1.0, 1.0), (0.4, 0.4)];
    for (row, (b1, b2)) in rows.iter().zip(expect) {
        let v: Vec<f64> = row.iter().map(|x| x.parse().unwrap()).collect();
        assert!((v[4] - b1).abs() < 1e-8 && v[5].abs() < 1e-8, "{row:?}");
        assert!((v[6] - b2).abs() < 1e-8 && v[7].abs() < 1e-8, "{row:?}");
    }
}

#[test]
fn extension_on_a_line() {
    let o = bcpw(&["extend", "--x1", "1", "--range", "-2,2", "--count", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = rows(&o);
    assert_eq!(rows.len(), 5);
    for row in rows {
        let v: Vec<f64> = row.iter().map(|x| x.parse().unwrap()).collect();
        // 1/(1 - iβ) with β = x0 + i on both components
        let exact = 1.0 / Complex64::new(2.0, -v[0]);
        assert!((Complex64::new(v[4], v[5]) - exact).norm() < 1e-10, "{v:?}");
    }
}

#[test]
fn recovered_samples_feed_back_in() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rec.csv");
    let o = bcpw(&["recover", "--range", "0.5,4", "--count", "8", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    for rec in reader.records() {
        let v: Vec<f64> = rec.unwrap().iter().map(|x| x.parse().unwrap()).collect();
        assert!((v[1] - (-v[0]).exp()).abs() < 1e-6 && v[2].abs() < 1e-6, "{v:?}");
    }
    // The sample file is accepted as a density.
    let o = bcpw(&["transform", "--csv", out.to_str().unwrap(), "--z", "0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn band_and_cauchy_commands() {
    let o = bcpw(&["band", "--z", "0.5,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<f64> = rows(&o)[0].iter().map(|x| x.parse().unwrap()).collect();
    assert!((v[4] - 2.0 * 0.5f64.sin() / 0.5).abs() < 1e-12, "{v:?}");

    let o = bcpw(&["cauchy", "--z", "0.3,2,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<f64> = rows(&o)[0].iter().map(|x| x.parse().unwrap()).collect();
    // 1/(β+i)² at β = 0.3 + 2i
    let exact = 1.0 / Complex64::new(0.3, 3.0).powi(2);
    assert!((Complex64::new(v[4], v[5]) - exact).norm() < 1e-4, "{v:?}");

    assert_eq!(bcpw(&["cauchy", "--z", "0.3,0,0,0"]).status.code(), Some(2));
}
