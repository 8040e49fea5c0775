use proptest::prelude::*;

use super::run;
use crate::order::classify_sign;
use crate::Tfn;

fn tfn_cmd(args: &[&str], stdin: &str) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("tfn").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn parse_row(line: &str) -> Tfn {
    let parts: Vec<f64> = line.split(',').map(|p| p.parse().unwrap()).collect();
    Tfn::new(parts[0], parts[1], parts[2]).unwrap()
}

fn ordered() -> impl Strategy<Value = Tfn> {
    prop::array::uniform3(-1e6f64..1e6).prop_map(|mut v| {
        v.sort_by(f64::total_cmp);
        Tfn::new(v[0], v[1], v[2]).unwrap()
    })
}

proptest! {
    #[test]
    fn exact_output_round_trips(x in ordered()) {
        let input = format!("{},{},{}\n", x.a(), x.b(), x.c());
        let (code, out, _) = tfn_cmd(&["--exact", "sort"], &input);
        prop_assert_eq!(code, 0);
        let back = parse_row(out.trim_end());
        prop_assert_eq!(back.components(), x.components());
    }

    #[test]
    fn classify_matches_library(x in ordered()) {
        let input = format!("{},{},{}\n", x.a(), x.b(), x.c());
        let (_, out, _) = tfn_cmd(&["classify"], &input);
        prop_assert_eq!(out.trim_end(), classify_sign(&x).as_str());
    }

    #[test]
    fn mean_matches_library(xs in prop::collection::vec(ordered(), 1..6)) {
        let input: String = xs.iter().map(|x| format!("{},{},{}\n", x.a(), x.b(), x.c())).collect();
        let (_, out, _) = tfn_cmd(&["--exact", "aggregate", "--method", "mean"], &input);
        let expected = crate::aggregate::arithmetic_mean(&crate::TfnVector::new(xs).unwrap()).unwrap();
        prop_assert_eq!(parse_row(out.trim_end()).components(), expected.components());
    }
}

#[test]
fn json_output_parses() {
    let (code, out, _) = tfn_cmd(&["--format", "json", "sort"], "b,3,4,5\na,1,2,3\n");
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[0]["id"], "a");
    assert_eq!(rows[1]["c"], 5.0);
}

#[test]
fn empty_input_is_a_usage_error() {
    let (code, _, err) = tfn_cmd(&["aggregate", "--method", "mean"], "# nothing\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "));
}
