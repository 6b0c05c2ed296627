use std::fs;
use std::io::{self, Write};
use std::path::Path;

use fano_core::verify::{SuiteRun, VerificationReport};

const HEADERS: [&str; 5] = ["status", "claim", "expected", "computed", "ms"];

fn cells(r: &VerificationReport) -> [String; 5] {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    [
        status.into(),
        r.claim_id.clone(),
        r.expected.clone(),
        r.computed.clone(),
        r.elapsed_ms.to_string(),
    ]
}

/// Aligned text table, one row per claim, followed by a summary line.
pub fn render_table(run: &SuiteRun) -> String {
    let rows: Vec<[String; 5]> = run.reports.iter().map(cells).collect();
    let mut widths = HEADERS.map(|h| h.chars().count());
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cols: [&str; 5]| -> String {
        let mut s = String::new();
        for (k, (c, w)) in cols.iter().zip(widths).enumerate() {
            if k > 0 {
                s.push_str("  ");
            }
            if k == 4 {
                s.push_str(&format!("{c:>w$}"));
            } else {
                s.push_str(c);
                if k < 4 {
                    s.extend(std::iter::repeat_n(' ', w - c.chars().count()));
                }
            }
        }
        s.trim_end().to_string()
    };
    let mut out = String::new();
    out.push_str(&line(HEADERS));
    out.push('\n');
    for row in &rows {
        out.push_str(&line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
        out.push('\n');
    }
    let passed = run.reports.iter().filter(|r| r.passed()).count();
    out.push_str(&format!(
        "suite {} (seed {}): {passed}/{} passed\n",
        run.suite,
        run.seed,
        run.reports.len()
    ));
    out
}

/// Process exit code for a finished run: 0 if every claim passed, 1 otherwise.
pub fn exit_code(run: &SuiteRun) -> u8 {
    u8::from(!run.all_passed())
}

pub fn write_json(run: &SuiteRun, path: &Path) -> io::Result<()> {
    let mut f = fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut f, run)?;
    f.write_all(b"\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use fano_core::verify::Status;

    fn report(id: &str, expected: &str, computed: &str) -> VerificationReport {
        VerificationReport {
            claim_id: id.into(),
            description: String::new(),
            paper_anchor: "Theorem: test".into(),
            expected: expected.into(),
            computed: computed.into(),
            status: if expected == computed {
                Status::Pass
            } else {
                Status::Fail
            },
            elapsed_ms: 3,
        }
    }

    #[test]
    fn columns_align() {
        let run = SuiteRun {
            suite: "t".into(),
            seed: 1,
            reports: vec![report("a", "Λ_{α²}", "Λ_{α²}"), report("long.claim", "1", "2")],
        };
        let table = render_table(&run);
        let lines: Vec<_> = table.lines().collect();
        let col = |l: &str| l.chars().position(|c| c == 'Λ' || c == '1' || c == 'e').unwrap();
        assert_eq!(col(lines[1]), col(lines[2]));
        assert!(lines[2].starts_with("FAIL"));
        assert!(table.ends_with("1/2 passed\n"));
    }

    #[test]
    fn exit_codes() {
        let mut run = SuiteRun {
            suite: "t".into(),
            seed: 1,
            reports: vec![report("a", "1", "1")],
        };
        assert_eq!(exit_code(&run), 0);
        run.reports.push(report("b", "1", "2"));
        assert_eq!(exit_code(&run), 1);
        assert!(render_table(&run).contains("FAIL"));
    }

    #[test]
    fn json_uses_lowercase_status_and_schema_order() {
        let run = SuiteRun {
            suite: "t".into(),
            seed: 7,
            reports: vec![report("b", "1", "2")],
        };
        let text = serde_json::to_string(&run).unwrap();
        assert!(text.starts_with(r#"{"suite":"t","seed":7,"reports":[{"claim_id":"b","description":"","paper_anchor""#));
        assert!(text.contains(r#""status":"fail","elapsed_ms":3"#));
    }
}
