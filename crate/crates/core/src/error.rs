use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in this crate.
///
/// The variants split into input validation problems, which mean the caller
/// asked for something outside a precondition, and capacity problems, which
/// mean an exact search was refused because it would be too large.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    Invalid(String),
    /// An exhaustive search was refused. `limit` names the parameter that
    /// tripped, `value` is what was asked and `max` is the configured cap.
    Capacity {
        limit: &'static str,
        value: usize,
        max: usize,
    },
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(msg) => f.write_str(msg),
            Error::Capacity { limit, value, max } => write!(
                f,
                "capacity exceeded: {limit} = {value} is above the limit of {max}"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::Invalid(alloc::format!($($arg)*))
    };
}
pub(crate) use invalid;
