//! Group carriers: finitely generated abelian groups in invariant-factor
//! form and finite tables for nonabelian class-2 groups.

pub mod abelian;
pub mod finite;
pub mod maps;
pub mod matrix;
pub mod subquotient;

pub use abelian::{AbelianGroup, Elem, SpanSolver};
pub use finite::FiniteGroup;
pub use maps::{binom2, Bilinear, Hom, QuadraticMap};
pub use subquotient::{cokernel, hom_is_iso, hom_kernel, kernel, Subquotient};

use crate::error::{Error, Result};
use crate::report::{LawReport, LawRun, Outcome};

/// Either kind of carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupCarrier {
    Abelian(AbelianGroup),
    Finite(FiniteGroup),
}

/// An element tagged with the carrier it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement<'a> {
    carrier: &'a GroupCarrier,
    value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Value {
    Coords(Elem),
    Index(usize),
}

impl GroupCarrier {
    pub fn zero(&self) -> GroupElement<'_> {
        let value = match self {
            GroupCarrier::Abelian(g) => Value::Coords(g.zero()),
            GroupCarrier::Finite(g) => Value::Index(g.zero()),
        };
        GroupElement { carrier: self, value }
    }

    pub fn coords(&self, v: Elem) -> Result<GroupElement<'_>> {
        match self {
            GroupCarrier::Abelian(g) => {
                g.check(&v)?;
                Ok(GroupElement { carrier: self, value: Value::Coords(v) })
            }
            GroupCarrier::Finite(_) => Err(Error::CarrierMismatch("finite carrier takes table indices".into())),
        }
    }

    pub fn index(&self, i: usize) -> Result<GroupElement<'_>> {
        match self {
            GroupCarrier::Finite(g) if i < g.order() => Ok(GroupElement { carrier: self, value: Value::Index(i) }),
            GroupCarrier::Finite(g) => Err(Error::IndexOutOfRange(format!("{i} >= {}", g.order()))),
            GroupCarrier::Abelian(_) => Err(Error::CarrierMismatch("abelian carrier takes coordinates".into())),
        }
    }

    /// Commutator centrality and bilinearity. Abelian carriers pass trivially.
    pub fn check_class2(&self) -> LawReport {
        match self {
            GroupCarrier::Finite(g) => g.check_class2(),
            GroupCarrier::Abelian(_) => {
                let mut run = LawRun::new("CLASS2", "commutators central and bilinear");
                run.record(Outcome::Holds);
                run.note("abelian carrier: every commutator is zero");
                run.finish()
            }
        }
    }
}

impl<'a> GroupElement<'a> {
    fn same(&self, other: &GroupElement<'_>) -> Result<()> {
        if std::ptr::eq(self.carrier, other.carrier) || self.carrier == other.carrier {
            Ok(())
        } else {
            Err(Error::CarrierMismatch("elements belong to different carriers".into()))
        }
    }

    pub fn add(&self, other: &GroupElement<'_>) -> Result<GroupElement<'a>> {
        self.same(other)?;
        let value = match (self.carrier, &self.value, &other.value) {
            (GroupCarrier::Abelian(g), Value::Coords(a), Value::Coords(b)) => Value::Coords(g.add(a, b)),
            (GroupCarrier::Finite(g), Value::Index(a), Value::Index(b)) => Value::Index(g.add(*a, *b)),
            _ => unreachable!("value kind follows carrier kind"),
        };
        Ok(GroupElement { carrier: self.carrier, value })
    }

    pub fn neg(&self) -> GroupElement<'a> {
        let value = match (self.carrier, &self.value) {
            (GroupCarrier::Abelian(g), Value::Coords(a)) => Value::Coords(g.neg(a)),
            (GroupCarrier::Finite(g), Value::Index(a)) => Value::Index(g.neg(*a)),
            _ => unreachable!("value kind follows carrier kind"),
        };
        GroupElement { carrier: self.carrier, value }
    }

    /// `-a - b + a + b`.
    pub fn commutator(&self, other: &GroupElement<'_>) -> Result<GroupElement<'a>> {
        self.same(other)?;
        let value = match (self.carrier, &self.value, &other.value) {
            (GroupCarrier::Abelian(g), Value::Coords(_), Value::Coords(_)) => Value::Coords(g.zero()),
            (GroupCarrier::Finite(g), Value::Index(a), Value::Index(b)) => Value::Index(g.commutator(*a, *b)),
            _ => unreachable!("value kind follows carrier kind"),
        };
        Ok(GroupElement { carrier: self.carrier, value })
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Coords(v) => v.iter().all(num_traits::Zero::is_zero),
            Value::Index(i) => *i == 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixing_carriers_is_an_error() {
        let a = GroupCarrier::Abelian(AbelianGroup::cyclic(&[4], &["g"]));
        let b = GroupCarrier::Abelian(AbelianGroup::cyclic(&[6], &["h"]));
        let x = a.zero();
        let y = b.zero();
        assert!(matches!(x.add(&y), Err(Error::CarrierMismatch(_))));
        let f = GroupCarrier::Finite(FiniteGroup::dihedral8());
        assert!(f.coords(vec![]).is_err());
        assert!(f.index(8).is_err());
    }

    #[test]
    fn abelian_commutators_vanish() {
        let a = GroupCarrier::Abelian(AbelianGroup::cyclic(&[0, 2], &["a", "b"]));
        let x = a.coords(vec![3.into(), 1.into()]).unwrap();
        let y = a.coords(vec![(-2).into(), 0.into()]).unwrap();
        assert!(x.commutator(&y).unwrap().is_zero());
        assert!(x.add(&x.neg()).unwrap().is_zero());
    }

    #[test]
    fn finite_commutator_with_zero() {
        let f = GroupCarrier::Finite(FiniteGroup::dihedral8());
        for i in 0..8 {
            let g = f.index(i).unwrap();
            assert!(g.commutator(&f.zero()).unwrap().is_zero());
        }
    }
}
