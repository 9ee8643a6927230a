use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Check { ok: bool, text: String },
    Info(String),
}

/// Line-oriented output. Checks print as `PASS …` / `FAIL …`; with records
/// enabled a tab-separated block with one line per check follows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn check(&mut self, ok: bool, text: impl Into<String>) {
        self.entries.push(Entry::Check { ok, text: text.into() });
    }

    pub fn info(&mut self, text: impl Into<String>) {
        self.entries.push(Entry::Info(text.into()));
    }

    /// Takes over a rendered core report, reading lines that start with PASS or
    /// FAIL as checks.
    pub fn absorb(&mut self, text: &str) {
        for line in text.lines() {
            match (line.strip_prefix("PASS "), line.strip_prefix("FAIL ")) {
                (Some(t), _) => self.check(true, t),
                (_, Some(t)) => self.check(false, t),
                _ => self.info(line),
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| !matches!(e, Entry::Check { ok: false, .. }))
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, records: bool) -> String {
        let mut out = String::new();
        let (mut pass, mut fail) = (0, 0);
        for e in &self.entries {
            match e {
                Entry::Check { ok: true, text } => {
                    pass += 1;
                    let _ = writeln!(out, "PASS {text}");
                }
                Entry::Check { ok: false, text } => {
                    fail += 1;
                    let _ = writeln!(out, "FAIL {text}");
                }
                Entry::Info(text) => {
                    let _ = writeln!(out, "{text}");
                }
            }
        }
        let _ = writeln!(out, "summary: {pass} passed, {fail} failed");
        if records {
            let _ = writeln!(out, "--- records");
            for (k, e) in self.entries.iter().enumerate() {
                if let Entry::Check { ok, text } = e {
                    let status = if *ok { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "record\t{k}\t{status}\t{}", text.replace('\t', " "));
                }
            }
        }
        out
    }
}
