use brauer_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn missing(flag: &str, what: &str) -> CliError {
        CliError::Parse(format!("--{flag} is required for {what}"))
    }

    /// 2 for unreadable input, 3 for semantic errors, 4 for size limits.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io(_) | CliError::Json(_) => 2,
            CliError::Core(e) => match e {
                Error::InvalidRing(_) | Error::Malformed(_) => 2,
                Error::BudgetExceeded { .. } | Error::BoundExceeded(_) => 4,
                _ => 3,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_contract() {
        assert_eq!(CliError::Parse(String::new()).exit_code(), 2);
        assert_eq!(CliError::from(Error::InvalidRing(String::new())).exit_code(), 2);
        assert_eq!(CliError::from(Error::StrandMismatch(2, 3)).exit_code(), 3);
        assert_eq!(CliError::from(Error::Hypothesis(String::new())).exit_code(), 3);
        assert_eq!(CliError::from(Error::BudgetExceeded { needed: 2, ceiling: 1 }).exit_code(), 4);
        assert_eq!(CliError::from(Error::BoundExceeded(String::new())).exit_code(), 4);
    }
}
