/// Errors from the core sequence operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation requires a nonempty sequence")]
    EmptySequence,
    #[error("extension cap must be positive")]
    ZeroCap,
    #[error("extension exceeded the cap of {cap} appended terms")]
    CapExhausted { cap: usize },
    #[error("invalid sequence literal: {0}")]
    Parse(String),
}
