use std::fmt::{self, Display, Write as _};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Not run, e.g. over budget or behind `--include-slow`.
    Skip,
    /// Logged without an asserted value.
    Info,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Info => "INFO",
        }
    }
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub item: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub rows: Vec<Row>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> VerificationReport {
        VerificationReport {
            suite: suite.into(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, item: &str, expected: String, computed: String, status: Status) {
        self.rows.push(Row {
            item: item.to_string(),
            expected,
            computed,
            status,
        });
    }

    /// Passes iff both sides render to the same text.
    pub fn check(&mut self, item: &str, expected: impl Display, computed: impl Display) -> bool {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(item, expected, computed, status);
        status == Status::Pass
    }

    pub fn info(&mut self, item: &str, expected: impl Display, computed: impl Display) {
        self.push(
            item,
            expected.to_string(),
            computed.to_string(),
            Status::Info,
        );
    }

    pub fn skip(&mut self, item: &str, expected: impl Display, reason: impl Display) {
        self.push(item, expected.to_string(), reason.to_string(), Status::Skip);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.rows.extend(other.rows);
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// One `item<TAB>expected<TAB>computed<TAB>STATUS` line per row.
    pub fn to_tsv(&self) -> String {
        let clean = |s: &str| s.replace(['\t', '\n'], " ");
        let mut out = String::new();
        for r in &self.rows {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                clean(&r.item),
                clean(&r.expected),
                clean(&r.computed),
                r.status
            )
            .unwrap();
        }
        out
    }

    /// Aligned table followed by a summary line.
    pub fn to_table(&self) -> String {
        let headers = ["status", "item", "expected", "computed"];
        let cells: Vec<[&str; 4]> = self
            .rows
            .iter()
            .map(|r| [r.status.label(), &r.item, &r.expected, &r.computed])
            .collect();
        let mut widths = headers.map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cols: [&str; 4]| {
            let parts: Vec<String> = cols
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
        };
        line(headers);
        let rules = widths.map(|w| "-".repeat(w));
        line([&rules[0], &rules[1], &rules[2], &rules[3]]);
        for row in cells {
            line(row);
        }
        writeln!(
            out,
            "\nsuite {}: {} pass, {} fail, {} skip, {} info; overall {}",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
            self.count(Status::Info),
            if self.passed() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_follows_failures_only() {
        let mut r = VerificationReport::new("t");
        assert!(r.check("a", 3, "3"));
        r.info("b", "?", 7);
        r.skip("c", 1, "over budget");
        assert!(r.passed());
        assert!(!r.check("d", "x", "y"));
        assert!(!r.passed());
        assert_eq!(
            r.to_tsv(),
            "a\t3\t3\tPASS\nb\t?\t7\tINFO\nc\t1\tover budget\tSKIP\nd\tx\ty\tFAIL\n"
        );
        assert!(r.to_table().ends_with("overall FAIL\n"));
    }
}
