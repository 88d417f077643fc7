use std::fmt::Display;

/// One computed value next to the value it should have, before it is bound
/// to a report record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub description: String,
    pub expected: String,
    pub computed: String,
    /// Set when the computation could not reach a verdict.
    pub undetermined: bool,
    pub note: Option<String>,
}

impl Claim {
    pub fn new(id: &'static str, description: impl Into<String>, expected: impl Display, computed: impl Display) -> Self {
        Claim {
            id,
            description: description.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            undetermined: false,
            note: None,
        }
    }

    pub fn undetermined(mut self) -> Self {
        self.undetermined = true;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        !self.undetermined && self.expected == self.computed
    }
}

/// `[a, b, c]` with canonical element printing.
pub fn list<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}
