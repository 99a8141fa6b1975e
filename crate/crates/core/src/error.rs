use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field elements belong to different contexts (L={0} vs L={1})")]
    ContextMismatch(u64, u64),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("label {label} does not divide the field order L={order}")]
    LabelNotDividing { label: u32, order: u64 },

    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid label `{0}` (labels are integers >= 2 or `inf`)")]
    InvalidLabel(String),
    #[error("conflicting labels for edge {0}-{1}")]
    ConflictingEdge(String, String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("graph is not of spherical type: {0}")]
    NotSpherical(String),
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("vector has coordinates of mixed signs: {0}")]
    MixedSigns(String),
    #[error("operands come from different Coxeter graphs")]
    GraphMismatch,
    #[error("not a root: {0}")]
    NotARoot(String),

    #[error("word is not in the kernel of pi_K (image has length {0})")]
    NotInKernel(usize),
    #[error("label of pair {0}, {1} undetermined at search depth {2}")]
    UndeterminedLabel(String, String, usize),
    #[error("label {label} inconsistent with pairing {pairing}")]
    LabelMismatch { label: String, pairing: String },
    #[error("support of {0} roots exceeds the subset enumeration limit of {1}")]
    SupportTooLarge(usize, usize),
    #[error("free-of-infinity subset classified as `other`: {0}")]
    NonPositiveSubset(String),
    #[error("graph of type `other` is outside the supported classes: {0}")]
    UnsupportedType(String),
}
