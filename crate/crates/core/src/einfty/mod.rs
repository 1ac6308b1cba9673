//! E∞ structure on a quadratic pair algebra: right actions of the symmetric
//! track groups on each degree, cup-one products, cup-one squares and the
//! law suites for commutativity.

pub mod laws;
pub mod square;

use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Elem, Hom};
use crate::qpa::{GradedQpa, Table};
use crate::qpm::Qpm;
use crate::enumerate::{label_seed, Bounds};
use crate::trackgroup::{binom_sign, factorial, Gen, Perm, TrackElem, MAX_DEGREE};

pub use laws::{check_action_laws, check_cupone_laws, check_einfty, check_equivariance};
pub use square::{check_comm_toda_laws, lor2_check, Lift, Squares};

/// Actions of the adjacent transpositions `sᵢ` and tracks `tᵢ`, `1 <= i < n`,
/// stored at index `i - 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeAction {
    /// `x ↦ x·[sᵢ]` on level 0.
    pub perm0: Vec<Hom>,
    /// `s ↦ s·[sᵢ]` on level 1.
    pub perm1: Vec<Hom>,
    /// `x ↦ x·[tᵢ]`, level 0 to level 1.
    pub track0: Vec<Hom>,
}

/// Actions per degree and the cup-one product tables
/// `B_{p,0} × B_{q,0} → B_{p+q,1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EinftyData {
    pub actions: Vec<DegreeAction>,
    pub cupone: Table,
}

impl EinftyData {
    /// `x·[g] = ε(g)x`, `s·[g] = ε(g)s`, `x·[t] = 0` and no cup-one product.
    pub fn sign(base: &GradedQpa) -> Self {
        let actions = base
            .degrees
            .iter()
            .enumerate()
            .map(|(n, m)| {
                let k = n.saturating_sub(1);
                let neg = |g: &AbelianGroup| Hom { images: (0..g.rank()).map(|i| g.neg(&g.generator(i))).collect() };
                DegreeAction {
                    perm0: vec![neg(&m.c0); k],
                    perm1: vec![neg(&m.c1); k],
                    track0: vec![Hom::zero(&m.c0, &m.c1); k],
                }
            })
            .collect();
        EinftyData { actions, cupone: Table::new() }
    }

    /// Shapes and well-definedness. Level `ee` must vanish from degree 2 on,
    /// where the `ee`-action would need data this format does not carry.
    pub fn validate(&self, base: &GradedQpa) -> Result<()> {
        if self.actions.len() != base.degrees.len() {
            return Err(Error::Invalid(format!(
                "actions given for {} degrees, algebra has {}",
                self.actions.len(),
                base.degrees.len()
            )));
        }
        if base.truncation() > MAX_DEGREE {
            return Err(Error::Unsupported(format!("E∞ structure above degree {MAX_DEGREE}")));
        }
        for (n, (m, a)) in base.degrees.iter().zip(&self.actions).enumerate() {
            if n >= 2 && !m.cee.is_trivial() {
                return Err(Error::Unsupported(format!(
                    "E∞ structure with nonzero level ee in degree {n} (the ee-action is not representable)"
                )));
            }
            let k = n.saturating_sub(1);
            if a.perm0.len() != k || a.perm1.len() != k || a.track0.len() != k {
                return Err(Error::Invalid(format!("degree {n}: expected {k} generator actions per level")));
            }
            for i in 0..k {
                a.perm0[i].check(&m.c0, &m.c0, &format!("degree {n} s{} on level 0", i + 1))?;
                a.perm1[i].check(&m.c1, &m.c1, &format!("degree {n} s{} on level 1", i + 1))?;
                a.track0[i].check(&m.c0, &m.c1, &format!("degree {n} t{}", i + 1))?;
            }
        }
        let top = base.truncation();
        for (&(p, q), b) in &self.cupone {
            if p + q > top {
                return Err(Error::Invalid(format!("cup-one ({p}, {q}) lands above the truncation")));
            }
            let d = &base.degrees;
            b.check(&d[p].c0, &d[q].c0, &d[p + q].c1, &format!("cup-one ({p}, {q})"))?;
        }
        Ok(())
    }
}

/// A quadratic pair algebra together with E∞ data, borrowed.
#[derive(Clone, Copy)]
pub struct Einfty<'a> {
    pub base: &'a GradedQpa,
    pub data: &'a EinftyData,
}

impl<'a> Einfty<'a> {
    pub fn new(base: &'a GradedQpa, data: &'a EinftyData) -> Result<Self> {
        data.validate(base)?;
        Ok(Einfty { base, data })
    }

    pub fn top(&self) -> usize {
        self.base.truncation()
    }

    pub fn deg(&self, n: usize) -> &'a Qpm {
        &self.base.degrees[n]
    }

    /// `x·η = P(x|x)_H`.
    pub fn eta(&self, n: usize, x: &Elem) -> Elem {
        let m = self.deg(n);
        m.pp(&m.cross(x, x))
    }

    /// `x·[g]` on level 0, along a reduced word of `g`.
    pub fn act0(&self, n: usize, x: &Elem, g: &Perm) -> Elem {
        let m = self.deg(n);
        g.reduced_word().iter().fold(x.clone(), |y, &i| self.data.actions[n].perm0[i - 1].apply(&m.c0, &y))
    }

    /// `s·[g]` on level 1.
    pub fn act1(&self, n: usize, s: &Elem, g: &Perm) -> Elem {
        let m = self.deg(n);
        g.reduced_word().iter().fold(s.clone(), |y, &i| self.data.actions[n].perm1[i - 1].apply(&m.c1, &y))
    }

    /// `x·[t]` for a word in `tᵢ` and `ω`, built letter by letter from
    /// `[1] = 0` with `x·[su] = (x·[δs])·[u] + εδ(u)·x·[s] + binom(εδs,2)binom(εδu,2)·x·η`.
    pub fn act_word(&self, n: usize, x: &Elem, word: &[Gen]) -> Elem {
        let m = self.deg(n);
        let act = &self.data.actions[n];
        let eta_x = self.eta(n, x);
        let mut moved = x.clone(); // x·[δs]
        let mut value = m.c1.zero(); // x·[s]
        let mut sign_s: i8 = 1;
        for g in word {
            let (on_moved, next_moved, sign_u) = match *g {
                Gen::T(i) => (act.track0[i - 1].apply(&m.c1, &moved), act.perm0[i - 1].apply(&m.c0, &moved), -1i8),
                Gen::Omega => (self.eta(n, &moved), moved.clone(), 1i8),
            };
            let mut v = if sign_u < 0 { m.c1.neg(&value) } else { value };
            v = m.c1.add(&v, &on_moved);
            if binom_sign(sign_s) * binom_sign(sign_u) == 1 {
                v = m.c1.add(&v, &eta_x);
            }
            value = v;
            moved = next_moved;
            sign_s *= sign_u;
        }
        value
    }

    /// `x·[t]`, evaluated on the canonical word of `t`.
    pub fn act_track(&self, n: usize, x: &Elem, t: &TrackElem) -> Elem {
        self.act_word(n, x, &t.word())
    }

    /// `a·([g]|[g′])_H` on level ee. Only degrees 0 and 1 may carry a
    /// nonzero level ee, and there both permutations are the identity.
    pub fn act_ee(&self, n: usize, a: &Elem, g: &Perm, h: &Perm) -> Elem {
        debug_assert!(g.degree() == n && h.degree() == n);
        let m = self.deg(n);
        if n < 2 {
            a.clone()
        } else {
            m.cee.zero()
        }
    }

    /// `x ⌣₁ y`.
    pub fn cup(&self, p: usize, x: &Elem, q: usize, y: &Elem) -> Elem {
        let tgt = &self.deg(p + q).c1;
        match self.data.cupone.get(&(p, q)) {
            Some(b) => b.apply(tgt, x, y),
            None => tgt.zero(),
        }
    }
}

/// All of `Σₙ` when it has at most `window_cap` elements, otherwise a
/// seeded sample of that size (always including the identity).
pub fn perms(n: usize, b: &Bounds) -> Vec<Perm> {
    let count = factorial(n);
    if count <= b.window_cap {
        return Perm::all(n);
    }
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(label_seed(b.seed, &format!("perms{n}")));
    let mut v = vec![Perm::identity(n)];
    v.extend((1..b.window_cap).map(|_| Perm::unrank(n, rng.gen_range(0..count as u64) as usize)));
    v
}

/// Both lifts of every permutation in [`perms`].
pub fn tracks(n: usize, b: &Bounds) -> Vec<TrackElem> {
    perms(n, b)
        .into_iter()
        .flat_map(|p| [TrackElem::from_parts(p.clone(), false), TrackElem::from_parts(p, true)])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn omega_acts_by_eta_in_degree_zero() {
        let inst = instances::builtin("zsigma").unwrap();
        let e = inst.einfty().unwrap().unwrap();
        let one = e.base.unit.clone();
        let w = TrackElem::omega(0);
        assert_eq!(e.act_track(0, &one, &w), e.eta(0, &one));
        assert_eq!(e.act_track(0, &one, &TrackElem::identity(0)), e.deg(0).c1.zero());
    }

    #[test]
    fn sign_action_on_lambda() {
        let inst = instances::builtin("lambda-z3-einfty").unwrap();
        let e = inst.einfty().unwrap().unwrap();
        let y = e.deg(2).c0.generator(0);
        let s1 = Perm::transposition(2, 1);
        assert_eq!(e.act0(2, &y, &s1), e.deg(2).c0.neg(&y));
        assert_eq!(e.act0(2, &y, &Perm::identity(2)), y);
        let t = TrackElem::shuffle_lift(1, 1).unwrap();
        assert!(e.deg(2).c1.is_zero(&e.act_track(2, &y, &t)));
    }

    #[test]
    fn ee_level_in_high_degree_is_rejected() {
        let mut b = instances::builtin("lambda-z").unwrap().qpa;
        b.degrees[2].cee = AbelianGroup::cyclic(&[0], &["e"]);
        b.degrees[2].h = crate::groups::QuadraticMap::zero(&b.degrees[2].c0, &b.degrees[2].cee);
        b.degrees[2].p = Hom::zero(&b.degrees[2].cee, &b.degrees[2].c1);
        let data = EinftyData::sign(&b);
        assert!(matches!(data.validate(&b), Err(Error::Unsupported(_))));
    }
}
