//! Symmetric groups and their `ℤ/2` central extensions `Σ̃ₙ`.

pub mod clifford;
pub mod perm;
pub mod track;
pub mod verify;

pub use clifford::Multivector;
pub use perm::{factorial, Perm};
pub use track::{cocycle, parse_word, Gen, TrackElem, MAX_DEGREE, MAX_TABLE_DEGREE};
pub use verify::verify_track_laws;

/// `binom(ε, 2)` for a sign: `1` for `-1` and `0` for `+1`.
pub fn binom_sign(e: i8) -> u32 {
    if e < 0 {
        1
    } else {
        0
    }
}
