//! Named expected-versus-computed checks, rendered as a table or as
//! `CHECK name expected computed status` lines.

use std::fmt::Display;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

impl Check {
    /// Passes when the rendered values agree.
    pub fn eq(name: impl Into<String>, expected: impl Display, computed: impl Display) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Check {
            name: name.into(),
            passed: expected == computed,
            expected,
            computed,
        }
    }

    pub fn failed(name: impl Into<String>, expected: impl Display, error: impl Display) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: format!("error: {error}"),
            passed: false,
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "FAIL"
        }
    }

    pub fn machine_line(&self) -> String {
        format!(
            "CHECK {} {} {} {}",
            self.name.replace(' ', "_"),
            self.expected.replace(' ', ""),
            self.computed.replace(' ', ""),
            self.status()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

pub fn render_checks(checks: &[Check], format: Format) -> String {
    match format {
        Format::Machine => checks.iter().map(|c| c.machine_line() + "\n").collect(),
        Format::Text => {
            let w0 = checks
                .iter()
                .map(|c| c.name.len())
                .max()
                .unwrap_or(0)
                .max(5);
            let w1 = checks
                .iter()
                .map(|c| c.expected.len())
                .max()
                .unwrap_or(0)
                .max(8);
            let w2 = checks
                .iter()
                .map(|c| c.computed.len())
                .max()
                .unwrap_or(0)
                .max(8);
            let mut out = format!(
                "{:<w0$}  {:<w1$}  {:<w2$}  status\n",
                "check", "expected", "computed"
            );
            for c in checks {
                out.push_str(&format!(
                    "{:<w0$}  {:<w1$}  {:<w2$}  {}\n",
                    c.name,
                    c.expected,
                    c.computed,
                    c.status()
                ));
            }
            out
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
