//! The `uacg` binary end to end.

use std::process::{Command, Output};

fn uacg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uacg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = uacg(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn spectrum_of_g9_as_csv() {
    let o = uacg(&["spectrum", "--family", "uacg", "--n", "9", "--alpha", "0", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "value,multiplicity");
    assert_eq!(lines.len(), 6);
    assert!(!text.contains('\r'));
    let total: usize = lines[1..].iter().map(|l| l.split(',').nth(1).unwrap().parse::<usize>().unwrap()).sum();
    assert_eq!(total, 9);
    // G_9 is not regular; its top eigenvalue is 1 + sqrt(19).
    assert!(lines[1].starts_with("5.3588989435"), "{text}");
}

#[test]
fn complement_spectrum_values() {
    let v = json(&["spectrum", "--family", "complement-uacg", "--n", "9", "--alpha", "0"]);
    let values: Vec<f64> = v["results"]["pairs"].as_array().unwrap().iter().map(|p| p["value"].as_f64().unwrap()).collect();
    assert_eq!(values, vec![3.0, 2.0, 0.0, -1.0, -3.0]);
    assert_eq!(v["command"], "spectrum");
    assert_eq!(v["results"]["method"], "closed-form");
}

#[test]
fn closed_method_unavailable_exits_3() {
    let o = uacg(&["spectrum", "--family", "uacg", "--n", "15", "--alpha", "0.5", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn energy_values() {
    let v = json(&["energy", "--family", "uacg", "--n", "27", "--alpha", "0.3"]);
    assert!((v["results"]["energy"].as_f64().unwrap() - 38.490).abs() < 1e-3);
    let v = json(&["energy", "--family", "complete", "--n", "121", "--alpha", "0.5"]);
    assert_eq!(v["results"]["energy"].as_f64().unwrap(), 120.0);
    assert_eq!(v["results"]["method"], "regular-shortcut");
    let v = json(&["energy", "--family", "uacg", "--n", "9", "--alpha", "0.5"]);
    assert!((v["results"]["shift"].as_f64().unwrap() - 24.0 / 9.0).abs() < 1e-11);
}

#[test]
fn json_keys_are_sorted_and_output_is_stable() {
    let args = ["energy", "--family", "unitary-cayley", "--n", "15", "--alpha", "0.25"];
    let a = uacg(&args);
    let b = uacg(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let keys: Vec<usize> = ["\"command\"", "\"inputs\"", "\"results\"", "\"version\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(uacg(&["verify", "--scope", "all", "--nmax", "2"]).status.code(), Some(2));
    let o = uacg(&["verify", "--scope", "closedform", "--nmax", "27"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| !l.starts_with("FAIL")));
}

#[test]
fn tables() {
    let t2 = stdout(&uacg(&["table", "--which", "2"]));
    assert!(t2.lines().any(|l| l == "9,0.375,10,10"), "{t2}");

    let t1 = stdout(&uacg(&["table", "--which", "1"]));
    let header: Vec<&str> = t1.lines().next().unwrap().split(',').collect();
    let col = header.iter().position(|&h| h == "0.4").unwrap();
    let row: Vec<&str> = t1.lines().find(|l| l.starts_with("uacg,81,")).unwrap().split(',').collect();
    assert_eq!(row[col], "108.809");

    let t3 = stdout(&uacg(&["table", "--which", "3", "--legacy-complement"]));
    let row: Vec<&str> = t3.lines().find(|l| l.starts_with("121,")).unwrap().split(',').collect();
    assert_eq!(row[1], "0.463601532567");
    for cell in &row[2..] {
        assert!((cell.parse::<f64>().unwrap() - 128.735632183908).abs() < 1e-8, "{row:?}");
    }

    assert_eq!(uacg(&["table", "--which", "4"]).status.code(), Some(2));
}

#[test]
fn sweep() {
    let o = uacg(&["sweep", "--family", "uacg", "--n", "9", "--alpha-start", "0", "--alpha-end", "0.9", "--step", "0.1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let energies: Vec<f64> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(energies.len(), 10);
    assert!(energies.windows(2).all(|w| w[0] > w[1]));
    assert!((energies[0] - 14.717).abs() < 1e-3);

    let o = uacg(&["sweep", "--family", "complete", "--n", "5", "--alpha-start", "0.2", "--alpha-end", "0.3", "--step", "0.5"]);
    assert_eq!(stdout(&o).lines().count(), 2);

    for bad in [["0.5", "0.2", "0.1"], ["0", "1", "0.1"], ["0", "0.5", "0"]] {
        let o = uacg(&["sweep", "--family", "uacg", "--n", "9", "--alpha-start", bad[0], "--alpha-end", bad[1], "--step", bad[2]]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn complement_of_complete_is_rejected() {
    let o = uacg(&["energy", "--family", "complement-complete", "--n", "6", "--alpha", "0"]);
    assert_eq!(o.status.code(), Some(2));
}
