//! Elements of the symmetric track groups `Σ̃ₙ`, stored as a permutation and
//! a sign bit relative to the canonical section (the lexicographically
//! smallest reduced word). Products use a 2-cocycle read off the Clifford
//! model: tabulated for small degrees, computed on demand above that.

use std::fmt;
use std::sync::OnceLock;

use super::clifford::Multivector;
use super::perm::{factorial, Perm};
use crate::error::{Error, Result};

/// Degrees whose cocycle is tabulated.
pub const MAX_TABLE_DEGREE: usize = 6;
/// Largest supported degree.
pub const MAX_DEGREE: usize = 12;

/// A generator symbol of the presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    /// `t_i`, 1-based.
    T(usize),
    Omega,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TrackElem {
    perm: Perm,
    omega: bool,
}

struct DegreeTable {
    images: Vec<Multivector>,
    cocycle: Vec<bool>,
}

static TABLES: [OnceLock<DegreeTable>; MAX_TABLE_DEGREE + 1] = [const { OnceLock::new() }; MAX_TABLE_DEGREE + 1];

fn table(n: usize) -> &'static DegreeTable {
    TABLES[n].get_or_init(|| DegreeTable::build(n))
}

/// Clifford image of the canonical lift of `p`.
fn canonical_image(p: &Perm) -> Multivector {
    let n = p.degree();
    p.reduced_word().iter().fold(Multivector::one(n), |acc, &i| acc.mul(&Multivector::generator(n, i)))
}

impl DegreeTable {
    fn build(n: usize) -> DegreeTable {
        let count = factorial(n);
        let gens = n.saturating_sub(1);
        let perms = Perm::all(n);
        let words: Vec<Vec<usize>> = perms.iter().map(Perm::reduced_word).collect();

        // images in order of increasing length: img(π) = v_{w0} · img(s_{w0} π)
        let mut order: Vec<usize> = (0..count).collect();
        order.sort_by_key(|&r| words[r].len());
        let mut images: Vec<Option<Multivector>> = vec![None; count];
        for &r in &order {
            let img = match words[r].first() {
                None => Multivector::one(n),
                Some(&i) => {
                    let rest = Perm::transposition(n, i).mul(&perms[r]).rank();
                    Multivector::generator(n, i).mul(images[rest].as_ref().expect("shorter image ready"))
                }
            };
            images[r] = Some(img);
        }
        let images: Vec<Multivector> = images.into_iter().map(Option::unwrap).collect();

        // rmul[r * gens + i - 1] is the rank of π_r s_i, and step[..] records
        // whether img(π_r)·vᵢ = -img(π_r sᵢ)
        let mut rmul = vec![0u32; count * gens];
        let mut step = vec![false; count * gens];
        for r in 0..count {
            for i in 1..=gens {
                let q = perms[r].mul(&Perm::transposition(n, i)).rank();
                rmul[r * gens + i - 1] = q as u32;
                let prod = images[r].mul(&Multivector::generator(n, i));
                step[r * gens + i - 1] =
                    prod.sign_relative_to(&images[q]).expect("pin group images agree up to sign");
            }
        }

        let mut cocycle = vec![false; count * count];
        for a in 0..count {
            for b in 0..count {
                let (mut rho, mut bit) = (a, false);
                for &i in &words[b] {
                    bit ^= step[rho * gens + i - 1];
                    rho = rmul[rho * gens + i - 1] as usize;
                }
                cocycle[a * count + b] = bit;
            }
        }
        DegreeTable { images, cocycle }
    }
}

/// `c(π, σ)`: the bit with `ŝ(π)ŝ(σ) = ω^c ŝ(πσ)` for the canonical section `ŝ`.
pub fn cocycle(a: &Perm, b: &Perm) -> bool {
    let n = a.degree();
    if n <= MAX_TABLE_DEGREE {
        let t = table(n);
        t.cocycle[a.rank() * factorial(n) + b.rank()]
    } else {
        let lhs = canonical_image(a).mul(&canonical_image(b));
        lhs.sign_relative_to(&canonical_image(&a.mul(b))).expect("pin group images agree up to sign")
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::Unsupported(format!("track groups above degree {MAX_DEGREE}")))
    } else {
        Ok(())
    }
}

impl TrackElem {
    pub fn identity(n: usize) -> Self {
        TrackElem { perm: Perm::identity(n), omega: false }
    }

    pub fn omega(n: usize) -> Self {
        TrackElem { perm: Perm::identity(n), omega: true }
    }

    /// `t_i` in `Σ̃ₙ`, `1 <= i < n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        check_degree(n)?;
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("t_{i} in degree {n}")));
        }
        Ok(TrackElem { perm: Perm::transposition(n, i), omega: false })
    }

    /// The canonical lift of `p` twisted by `ω^omega`.
    pub fn from_parts(perm: Perm, omega: bool) -> Self {
        TrackElem { perm, omega }
    }

    pub fn from_word(n: usize, word: &[Gen]) -> Result<Self> {
        check_degree(n)?;
        let mut acc = Self::identity(n);
        for g in word {
            let e = match *g {
                Gen::T(i) => Self::generator(n, i)?,
                Gen::Omega => Self::omega(n),
            };
            acc = acc.mul(&e)?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    /// `δ(t)`.
    pub fn delta(&self) -> &Perm {
        &self.perm
    }

    /// Whether this is `ω` times the canonical lift of `δ(t)`.
    pub fn omega_bit(&self) -> bool {
        self.omega
    }

    /// `ε(δ(t))`.
    pub fn epsilon(&self) -> i8 {
        self.perm.sign()
    }

    pub fn is_identity(&self) -> bool {
        !self.omega && self.perm.is_identity()
    }

    pub fn mul(&self, other: &TrackElem) -> Result<TrackElem> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(format!(
                "Σ̃{} times Σ̃{}",
                self.degree(),
                other.degree()
            )));
        }
        check_degree(self.degree())?;
        Ok(TrackElem {
            perm: self.perm.mul(&other.perm),
            omega: self.omega ^ other.omega ^ cocycle(&self.perm, &other.perm),
        })
    }

    pub fn times_omega(&self) -> TrackElem {
        TrackElem { perm: self.perm.clone(), omega: !self.omega }
    }

    pub fn inverse(&self) -> TrackElem {
        let inv = self.perm.inverse();
        let c = cocycle(&self.perm, &inv);
        TrackElem { perm: inv, omega: self.omega ^ c }
    }

    pub fn pow(&self, k: usize) -> TrackElem {
        (0..k).fold(Self::identity(self.degree()), |acc, _| &acc * self)
    }

    /// Generator word: `ω` (if the bit is set) followed by the canonical word.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Vec::new();
        if self.omega {
            w.push(Gen::Omega);
        }
        w.extend(self.perm.reduced_word().into_iter().map(Gen::T));
        w
    }

    /// Image of this element in the Clifford model.
    pub fn clifford_image(&self) -> Multivector {
        let n = self.degree();
        let img = if n <= MAX_TABLE_DEGREE {
            table(n).images[self.perm.rank()].clone()
        } else {
            canonical_image(&self.perm)
        };
        if self.omega {
            img.neg()
        } else {
            img
        }
    }

    /// `Sᵏ ∧ t`: generators shift up by `k`, `ω` is fixed.
    pub fn suspend_left(&self, k: usize) -> Result<TrackElem> {
        let n = self.degree();
        let word: Vec<Gen> = self
            .word()
            .into_iter()
            .map(|g| match g {
                Gen::T(i) => Gen::T(i + k),
                Gen::Omega => Gen::Omega,
            })
            .collect();
        Self::from_word(n + k, &word)
    }

    /// `t ∧ Sᵏ`: generators and `ω` are fixed.
    pub fn suspend_right(&self, k: usize) -> Result<TrackElem> {
        Self::from_word(self.degree() + k, &self.word())
    }

    /// The shuffle lift `τ̂_{n,m}`: `n` groups, the `j`-th being `t_{m+j-1} ⋯ t_j`.
    pub fn shuffle_lift(n: usize, m: usize) -> Result<TrackElem> {
        let mut word = Vec::with_capacity(n * m);
        for j in 1..=n {
            for i in (j..j + m).rev() {
                word.push(Gen::T(i));
            }
        }
        Self::from_word(n + m, &word)
    }
}

impl std::ops::Mul for &TrackElem {
    type Output = TrackElem;
    fn mul(self, rhs: &TrackElem) -> TrackElem {
        TrackElem::mul(self, rhs).expect("track elements of equal supported degree")
    }
}

impl fmt::Display for TrackElem {
    /// `ω·t1 t2` style word, `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = w
            .iter()
            .map(|g| match g {
                Gen::T(i) => format!("t{i}"),
                Gen::Omega => "w".to_string(),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses words such as `t1 t3 w t2` (also accepting `ω` and `1`).
pub fn parse_word(s: &str) -> Result<Vec<Gen>> {
    let mut out = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == ',' || c == '*' || c == '.').filter(|t| !t.is_empty()) {
        match tok {
            "w" | "ω" | "omega" => out.push(Gen::Omega),
            "1" | "e" => {}
            t if t.starts_with('t') => {
                let i: usize = t[1..]
                    .trim_start_matches('_')
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad generator '{t}'")))?;
                out.push(Gen::T(i));
            }
            t => return Err(Error::Invalid(format!("bad generator '{t}'"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize) -> TrackElem {
        TrackElem::generator(n, i).unwrap()
    }

    #[test]
    fn distant_generators_anticommute() {
        let lhs = &t(4, 1) * &t(4, 3);
        let rhs = &TrackElem::omega(4) * &(&t(4, 3) * &t(4, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn presentation_basics() {
        assert!((&t(4, 2) * &t(4, 2)).is_identity());
        let w = TrackElem::from_word(4, &[Gen::T(1), Gen::T(3), Gen::T(1), Gen::T(3)]).unwrap();
        assert_eq!(w, TrackElem::omega(4));
        let a = TrackElem::from_word(3, &[Gen::T(1), Gen::T(2), Gen::T(1)]).unwrap();
        let b = TrackElem::from_word(3, &[Gen::T(2), Gen::T(1), Gen::T(2)]).unwrap();
        assert_eq!(a, b);
        assert!(TrackElem::from_word(2, &[]).unwrap().is_identity());
        assert!(TrackElem::generator(3, 3).is_err());
    }

    #[test]
    fn shuffle_lifts() {
        assert_eq!(TrackElem::shuffle_lift(1, 1).unwrap(), t(2, 1));
        assert!(TrackElem::shuffle_lift(0, 3).unwrap().is_identity());
        assert_eq!(TrackElem::shuffle_lift(2, 1).unwrap(), &t(3, 1) * &t(3, 2));
        let s = TrackElem::shuffle_lift(2, 2).unwrap();
        assert_eq!(&s * &s, TrackElem::omega(4));
        assert_eq!(s.delta(), &Perm::block_shuffle(2, 2));
    }

    #[test]
    fn suspensions() {
        assert_eq!(t(2, 1).suspend_left(1).unwrap(), t(3, 2));
        let t12 = &t(3, 1) * &t(3, 2);
        assert_eq!(t12.suspend_left(2).unwrap(), &t(5, 3) * &t(5, 4));
        assert_eq!(t(2, 1).suspend_right(2).unwrap(), t(4, 1));
        assert_eq!(t12.suspend_right(1).unwrap(), &t(4, 1) * &t(4, 2));
        assert_eq!(TrackElem::omega(2).suspend_left(3).unwrap(), TrackElem::omega(5));
    }

    #[test]
    fn on_demand_cocycle_matches_table_route() {
        // degree 7 goes through direct Clifford products
        let a = TrackElem::from_word(7, &[Gen::T(1), Gen::T(5), Gen::T(6)]).unwrap();
        let b = TrackElem::from_word(7, &[Gen::T(3), Gen::T(1)]).unwrap();
        let ab = &a * &b;
        assert_eq!(ab.clifford_image(), a.clifford_image().mul(&b.clifford_image()));
        assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("t1 w t3").unwrap(), vec![Gen::T(1), Gen::Omega, Gen::T(3)]);
        assert!(parse_word("x1").is_err());
    }
}
