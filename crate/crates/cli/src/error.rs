use ihull_core::cover::CoverError;
use ihull_core::grid::GridError;
use ihull_core::hull::HullError;
use ihull_core::lcf::EvalError;
use ihull_core::LcError;
use thiserror::Error;

/// Failures that end a command before it produces a result.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments, unparseable literals, points outside a space.
    #[error("{0}")]
    Input(String),
    /// The answer depends on digits beyond the requested precision.
    #[error("{0}")]
    Indeterminate(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Indeterminate(_) => 3,
        }
    }
}

fn lc_is_indeterminate(e: &LcError) -> bool {
    matches!(e, LcError::Indeterminate { .. } | LcError::ZeroOrUnknownLeading { .. })
}

impl From<LcError> for CliError {
    fn from(e: LcError) -> Self {
        if lc_is_indeterminate(&e) {
            CliError::Indeterminate(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match &e {
            EvalError::Arithmetic { source, .. } if lc_is_indeterminate(source) => {
                CliError::Indeterminate(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::BranchIndeterminate(_) | CoverError::Indeterminate(_) => CliError::Indeterminate(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<HullError> for CliError {
    fn from(e: HullError) -> Self {
        match e {
            HullError::Lc(e) => e.into(),
            HullError::Cover(e) => e.into(),
            HullError::Eval(e) => e.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<GridError> for CliError {
    fn from(e: GridError) -> Self {
        CliError::Input(e.to_string())
    }
}
