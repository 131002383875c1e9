use pgl2q_web::{classify_json, decompose_json, eval_json};

#[test]
fn eval_reports_the_matrix() {
    let v = eval_json("K V").unwrap();
    assert_eq!(v["matrix"], "[[1,1],[0,1]]");
    assert_eq!(v["order"], "parabolic");
    assert!(eval_json("K V)").is_err());
}

#[test]
fn decompose_round_trips() {
    let v = decompose_json("[[2,1],[1,1]]").unwrap();
    assert_eq!(v["word"], "H(2) T V H(2)^-1 U T");
    assert_eq!(v["branch"], "a");
    assert_eq!(v["verified"], true);
    assert!(decompose_json("[[1,2],[2,4]]").is_err());
}

#[test]
fn classify_gives_a_conjugator() {
    let v = classify_json("[[1,1],[-3,1]]").unwrap();
    assert_eq!(v["order"], "finite 3");
    assert_eq!(v["verified"], true);
    let v = classify_json("[[1,-1],[2,1]]").unwrap();
    assert_eq!(v["order"], "elliptic-infinite");
    assert!(v.get("conjugator").is_none());
}
