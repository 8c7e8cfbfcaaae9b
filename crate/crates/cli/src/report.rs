use serde_json::{Map, Value};

/// One result: a line of text, or a JSON object with the keys `command`,
/// `verdict`, `value` and `witness` (absent keys omitted) plus any extras.
pub struct Report {
    command: &'static str,
    verdict: Option<String>,
    value: Option<Value>,
    witness: Option<Value>,
    extra: Vec<(&'static str, Value)>,
    text: String,
    /// 0 for success or a positive verdict, 1 for a negative one.
    pub exit: u8,
}

impl Report {
    pub fn new(command: &'static str, text: impl Into<String>) -> Report {
        Report {
            command,
            verdict: None,
            value: None,
            witness: None,
            extra: Vec::new(),
            text: text.into(),
            exit: 0,
        }
    }

    pub fn verdict(mut self, v: impl Into<String>) -> Report {
        self.verdict = Some(v.into());
        self
    }

    pub fn value(mut self, v: impl Into<Value>) -> Report {
        self.value = Some(v.into());
        self
    }

    pub fn witness(mut self, w: Value) -> Report {
        self.witness = Some(w);
        self
    }

    pub fn extra(mut self, key: &'static str, v: impl Into<Value>) -> Report {
        self.extra.push((key, v.into()));
        self
    }

    pub fn failing(mut self, failed: bool) -> Report {
        self.exit = u8::from(failed);
        self
    }

    pub fn render(&self, json: bool) -> String {
        if !json {
            return self.text.clone();
        }
        let mut m = Map::new();
        m.insert("command".into(), self.command.into());
        if let Some(v) = &self.verdict {
            m.insert("verdict".into(), v.clone().into());
        }
        if let Some(v) = &self.value {
            m.insert("value".into(), v.clone());
        }
        if let Some(w) = &self.witness {
            m.insert("witness".into(), w.clone());
        }
        for (k, v) in &self.extra {
            m.insert((*k).into(), v.clone());
        }
        Value::Object(m).to_string()
    }
}
