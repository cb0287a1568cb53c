use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible Lie type {series}{rank}")]
    InadmissibleType { series: char, rank: usize },

    #[error("rank {rank} exceeds the configured ceiling of {ceiling}")]
    RankCeiling { rank: usize, ceiling: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not in the Weyl alcove")]
    OutsideAlcove(String),

    #[error("invalid root of unity l={l} (l'={l_prime}): requires {bound}")]
    InvalidContext { l: u64, l_prime: u64, bound: String },

    #[error("malformed Weyl word: {0}")]
    MalformedWord(String),

    #[error("translation {0} is not in the lattice M")]
    NotInTranslationLattice(String),

    #[error("cyclotomic ring mismatch: order {left} vs {right}")]
    RingMismatch { left: u64, right: u64 },

    #[error("residue {residue} is not coprime to {n}")]
    NonCoprimeResidue { residue: i64, n: u64 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::SelfCheck(_))
    }
}
