//! Full harness run over `n ≤ 6`.

use hilbfan::kernel::Characteristic;
use hilbfan::verify::{Golden, Status, Target, Verifier};

#[test]
fn harness_up_to_six() {
    let v = Verifier::with_golden(Characteristic::ZERO, Golden::builtin());
    let report = v.run(&Target::standard(), 6).unwrap();
    let failed: Vec<String> = report
        .reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| format!("{} {:?}", r.id, r.params))
        .collect();
    for r in report.reports.iter().filter(|r| r.status == Status::Fail) {
        eprintln!("{}", serde_json::to_string(r).unwrap());
    }
    // Only the two limit statements that start from a family-fixed ideal fail.
    assert_eq!(
        failed,
        vec![
            r#"prop33 {"family": String("g41"), "part": String("limits")}"#.to_string(),
            r#"prop33 {"family": String("g32"), "part": String("limits")}"#.to_string(),
        ]
    );
    // claims 5 and 6 are out of range at n = 1 only
    assert_eq!(report.summary.range, 2);
}
