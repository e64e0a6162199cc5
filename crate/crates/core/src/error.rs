use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("player count {n} outside the supported range [2, {max}]")]
    PlayerCount { n: usize, max: usize },

    #[error("expected {expected} profiles in the payoff table, found {found}")]
    ProfileCount { expected: usize, found: usize },

    #[error("profile {profile}: expected {expected} payoffs, found {found}")]
    PayoffArity {
        profile: usize,
        expected: usize,
        found: usize,
    },

    #[error("profile has length {found}, expected {expected}")]
    ProfileLength { expected: usize, found: usize },

    #[error("strategy bit {value} at position {position} is not 0 or 1")]
    StrategyBit { position: usize, value: u8 },

    #[error("{what} index {index} out of range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("probability {value} for player {player} is outside [0, 1]")]
    Probability { player: usize, value: String },

    #[error("a system of equalities needs at least one line")]
    EmptySystem,

    #[error("payoff swap is defined for 2-player games only, got {n} players")]
    NotTwoPlayer { n: usize },

    #[error("player name list has {found} entries, expected {expected}")]
    PlayerNames { expected: usize, found: usize },

    #[error("profile dimension {found} does not match game dimension {expected}")]
    Dimension { expected: usize, found: usize },

    #[error("{location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
