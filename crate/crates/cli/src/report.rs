use std::fmt::{self, Display};

/// Ordered `key: value` lines.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self::default();
        r.field("command", command);
        r
    }

    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.lines {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// Floats are printed with a fixed precision so reports diff cleanly.
pub fn float(v: f64) -> String {
    if v.is_infinite() {
        "inf".into()
    } else {
        format!("{v:.12}")
    }
}
