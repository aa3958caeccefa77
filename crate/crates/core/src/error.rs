use alloc::string::String;
use core::fmt;

/// Errors raised by the lattice, transform, measure and polynomial layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An enumeration or search was asked for a ground set above its cap.
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    /// Malformed partition or rational text.
    Parse(String),
    /// The same element appears twice in a partition.
    DuplicateElement(usize),
    /// Element outside `1..=n`.
    ElementOutOfRange { element: usize, n: usize },
    /// Two partitions that must live on the same ground set do not.
    SizeMismatch { left: usize, right: usize },
    /// The operation is only defined on noncrossing partitions.
    Crossing,
    /// `σ ≤ π` was required but does not hold.
    NotRefinement,
    /// A moment or cumulant beyond the stored truncation order was needed.
    Truncated { needed: usize, available: usize },
    /// Compositional inversion needs a nonzero linear coefficient.
    ZeroLinearCoefficient,
    /// The process model must be centered for this operation.
    NotCentered,
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapExceeded { what, n, cap } => {
                write!(f, "{what}: n = {n} exceeds the cap {cap}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::DuplicateElement(e) => write!(f, "element {e} appears more than once"),
            Error::ElementOutOfRange { element, n } => {
                write!(f, "element {element} is outside 1..={n}")
            }
            Error::SizeMismatch { left, right } => {
                write!(f, "ground set sizes differ ({left} vs {right})")
            }
            Error::Crossing => f.write_str("partition is crossing"),
            Error::NotRefinement => f.write_str("first partition is not a refinement of the second"),
            Error::Truncated { needed, available } => write!(
                f,
                "order {needed} requested but only {available} terms are available"
            ),
            Error::ZeroLinearCoefficient => {
                f.write_str("series has zero linear coefficient (r_1 = 0)")
            }
            Error::NotCentered => f.write_str("process model is not centered"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
