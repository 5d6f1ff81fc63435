//! Monomial ideals given by exponent vectors of their minimal generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree::{support_size, DegreeBox, Multidegree};
use crate::error::{precondition, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Multidegree>,
}

impl MonomialIdeal {
    /// Keeps the ≤-minimal exponents, sorted. An empty list is the zero ideal.
    pub fn minimalize(n: usize, raw: &[Multidegree]) -> Result<Self> {
        for g in raw {
            if g.len() != n {
                return Err(Error::Parse(format!(
                    "generator {g} has {} coordinates, expected {n}",
                    g.len()
                )));
            }
            if !g.is_nonnegative() {
                return Err(Error::NegativeExponent(g.to_string()));
            }
        }
        let mut gens: Vec<Multidegree> = raw
            .iter()
            .filter(|g| !raw.iter().any(|h| h.lt(g)))
            .cloned()
            .collect();
        gens.sort();
        gens.dedup();
        Ok(MonomialIdeal { n, gens })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    /// The unit ideal `S`.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Multidegree::zero(n)],
        }
    }

    /// Convenience constructor from integer arrays; panics on bad input.
    pub fn from_exponents<const N: usize>(raw: &[[i32; N]]) -> Self {
        let gens: Vec<Multidegree> = raw.iter().map(|g| Multidegree::from(*g)).collect();
        MonomialIdeal::minimalize(N, &gens).expect("valid exponent vectors")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.coords().iter().all(|&c| c == 0))
    }

    /// `x^a ∈ I`.
    pub fn contains(&self, a: &Multidegree) -> bool {
        self.gens.iter().any(|g| g.leq(a))
    }

    /// Every minimal generator is `≤ t`.
    pub fn is_t_determined(&self, t: &Multidegree) -> bool {
        self.gens.iter().all(|g| g.leq(t))
    }

    pub fn require_t_determined(&self, t: &Multidegree) -> Result<()> {
        if t.len() != self.n {
            return precondition(format!("t = {t} has the wrong length for n = {}", self.n));
        }
        if !t.is_nonnegative() {
            return precondition(format!("t = {t} must be nonnegative"));
        }
        match self.gens.iter().find(|g| !g.leq(t)) {
            Some(g) => Err(Error::NotTDetermined {
                t: t.to_string(),
                generator: g.to_string(),
            }),
            None => Ok(()),
        }
    }

    /// `I^[t]`, by sweeping `[0,t]`. The dual of `0` is `S` and the dual of
    /// `S` is `0`.
    pub fn alexander_dual(&self, t: &Multidegree) -> Result<MonomialIdeal> {
        self.require_t_determined(t)?;
        let duals: Vec<Multidegree> = self
            .gens
            .iter()
            .map(|a| {
                Multidegree::new(
                    (0..self.n)
                        .map(|j| {
                            if a.get(j) >= 1 {
                                t.get(j) + 1 - a.get(j)
                            } else {
                                0
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        // c ∈ 𝔪^b iff some j has b_j ≥ 1 and c_j ≥ b_j.
        let member = |c: &Multidegree| {
            duals
                .iter()
                .all(|b| (0..self.n).any(|j| b.get(j) >= 1 && c.get(j) >= b.get(j)))
        };
        let inside: Vec<Multidegree> = DegreeBox::up_to(t).iter().filter(|c| member(c)).collect();
        MonomialIdeal::minimalize(self.n, &inside)
    }

    pub fn support_profile(&self, t: &Multidegree) -> Result<SupportProfile> {
        self.require_t_determined(t)?;
        let bx = DegreeBox::up_to(t);
        let nonzero = bx.iter().map(|a| !self.contains(&a)).collect();
        Ok(SupportProfile { bx, nonzero })
    }

    /// `y ∈ [0,t]` in the support of `S/I` with nothing above it in the box.
    pub fn peaks(&self, t: &Multidegree) -> Result<Vec<Multidegree>> {
        Ok(self.support_profile(t)?.maximal())
    }

    /// `y ∈ [0,t]` outside the support with everything strictly below it
    /// inside. These are exactly the minimal generators.
    pub fn indents(&self, t: &Multidegree) -> Result<Vec<Multidegree>> {
        let p = self.support_profile(t)?;
        let out = p
            .bx
            .iter()
            .filter(|y| {
                !p.nonzero(y) && (0..self.n).all(|j| y.get(j) == 0 || p.nonzero(&y.shifted(j, -1)))
            })
            .collect();
        Ok(out)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", monomial(g))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn variable(n: usize, j: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][j].to_string()
    } else {
        format!("x{}", j + 1)
    }
}

/// `x^2y`, `z`, or `1` for the zero vector.
pub fn monomial(a: &Multidegree) -> String {
    let mut s = String::new();
    for j in 0..a.len() {
        match a.get(j) {
            0 => {}
            1 => s.push_str(&variable(a.len(), j)),
            e => s.push_str(&format!("{}^{e}", variable(a.len(), j))),
        }
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Which degrees of `[0,t]` carry `S/I`. Always an order ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportProfile {
    bx: DegreeBox,
    nonzero: Vec<bool>,
}

impl SupportProfile {
    /// From a predicate on `[0,t]`; rejects sets that are not downward closed.
    pub fn from_predicate(t: &Multidegree, f: impl Fn(&Multidegree) -> bool) -> Result<Self> {
        let bx = DegreeBox::up_to(t);
        let nonzero = bx.iter().map(|a| f(&a)).collect();
        let p = SupportProfile { bx, nonzero };
        if !p.is_downward_closed() {
            return precondition("support set is not an order ideal");
        }
        Ok(p)
    }

    pub fn t(&self) -> &Multidegree {
        self.bx.hi()
    }

    pub fn degree_box(&self) -> &DegreeBox {
        &self.bx
    }

    /// `(S/I)_a ≠ 0`. Degrees outside `[0,t]` are read through the
    /// truncation `min(a, t)`; negative degrees are zero.
    pub fn nonzero(&self, a: &Multidegree) -> bool {
        if !a.is_nonnegative() {
            return false;
        }
        let clamped = a.min(self.t());
        self.nonzero[self.bx.index(&clamped).expect("clamped into box")]
    }

    pub fn is_downward_closed(&self) -> bool {
        self.bx.iter().all(|a| {
            !self.nonzero(&a)
                || (0..a.len()).all(|j| a.get(j) == 0 || self.nonzero(&a.shifted(j, -1)))
        })
    }

    pub fn support(&self) -> Vec<Multidegree> {
        self.bx.iter().filter(|a| self.nonzero(a)).collect()
    }

    pub fn maximal(&self) -> Vec<Multidegree> {
        let t = self.t().clone();
        self.bx
            .iter()
            .filter(|y| {
                self.nonzero(y)
                    && (0..y.len()).all(|j| y.get(j) == t.get(j) || !self.nonzero(&y.shifted(j, 1)))
            })
            .collect()
    }

    /// The ideal whose quotient has this support: minimal elements of the
    /// complement.
    pub fn ideal(&self) -> MonomialIdeal {
        let outside: Vec<Multidegree> = self.bx.iter().filter(|a| !self.nonzero(a)).collect();
        MonomialIdeal::minimalize(self.t().len(), &outside).expect("box points are valid")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relative {
    Below,
    Above,
}

/// Number of coordinates where `y` and `x` differ, with `y ≤ x` (below) or
/// `y ≥ x` (above).
pub fn relative_dimension(y: &Multidegree, x: &Multidegree, mode: Relative) -> Result<usize> {
    let ok = match mode {
        Relative::Below => y.leq(x),
        Relative::Above => x.leq(y),
    };
    if !ok {
        return precondition(format!("{y} is not {mode:?} {x}"));
    }
    Ok(support_size(&y.sub(x)))
}

/// Every order ideal of `[0,t]` as a support profile, in a fixed order.
/// The first is empty (`I = S`) and the last is the whole box (`I = 0`).
pub fn all_profiles(t: &Multidegree) -> Vec<SupportProfile> {
    let bx = DegreeBox::up_to(t);
    let points: Vec<Multidegree> = bx.iter().collect();
    let mut out = Vec::new();
    let mut chosen = vec![false; points.len()];
    // Lexicographic order lists every a − εⱼ before a, so a point can be
    // added exactly when its lower neighbours already are.
    fn go(
        k: usize,
        points: &[Multidegree],
        bx: &DegreeBox,
        chosen: &mut Vec<bool>,
        out: &mut Vec<SupportProfile>,
    ) {
        if k == points.len() {
            out.push(SupportProfile {
                bx: bx.clone(),
                nonzero: chosen.clone(),
            });
            return;
        }
        chosen[k] = false;
        go(k + 1, points, bx, chosen, out);
        let a = &points[k];
        let allowed =
            (0..a.len()).all(|j| a.get(j) == 0 || chosen[bx.index(&a.shifted(j, -1)).unwrap()]);
        if allowed {
            chosen[k] = true;
            go(k + 1, points, bx, chosen, out);
            chosen[k] = false;
        }
    }
    go(0, &points, &bx, &mut chosen, &mut out);
    out
}

/// Every positively `t`-determined monomial ideal, including `0` and `S`.
pub fn all_t_determined(t: &Multidegree) -> Vec<MonomialIdeal> {
    all_profiles(t).iter().map(|p| p.ideal()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md<const N: usize>(c: [i32; N]) -> Multidegree {
        Multidegree::from(c)
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            MonomialIdeal::from_exponents(&[[1, 1], [2, 1]]).gens(),
            &[md([1, 1])]
        );
        assert!(MonomialIdeal::minimalize(2, &[]).unwrap().is_zero());
        assert_eq!(
            MonomialIdeal::from_exponents(&[[2, 0], [0, 2], [1, 1]])
                .gens()
                .len(),
            3
        );
        assert!(matches!(
            MonomialIdeal::minimalize(2, &[md([-1, 0])]),
            Err(Error::NegativeExponent(_))
        ));
    }

    #[test]
    fn contains_examples() {
        let i = MonomialIdeal::from_exponents(&[[1, 1]]);
        assert!(i.contains(&md([1, 1])));
        assert!(!i.contains(&md([5, 0])));
        assert!(!MonomialIdeal::zero(2).contains(&md([3, 3])));
    }

    #[test]
    fn t_determined_examples() {
        let i = MonomialIdeal::from_exponents(&[[2, 0], [0, 2]]);
        assert!(i.is_t_determined(&md([2, 2])));
        assert!(!i.is_t_determined(&md([1, 1])));
        assert!(MonomialIdeal::from_exponents(&[[1, 1]]).is_t_determined(&md([1, 1])));
    }

    #[test]
    fn alexander_dual_examples() {
        let i = MonomialIdeal::from_exponents(&[[2, 1, 0], [0, 0, 1]]);
        let d = i.alexander_dual(&md([2, 1, 1])).unwrap();
        assert_eq!(d, MonomialIdeal::from_exponents(&[[1, 0, 1], [0, 1, 1]]));
        // 𝔪^{(1,1)} = (x, y)
        let xy = MonomialIdeal::from_exponents(&[[1, 1]]);
        assert_eq!(
            xy.alexander_dual(&md([1, 1])).unwrap(),
            MonomialIdeal::from_exponents(&[[1, 0], [0, 1]])
        );
        let x = MonomialIdeal::from_exponents(&[[1]]);
        assert_eq!(x.alexander_dual(&md([1])).unwrap(), x);
        assert_eq!(
            MonomialIdeal::zero(2).alexander_dual(&md([1, 1])).unwrap(),
            MonomialIdeal::unit(2)
        );
        assert_eq!(
            MonomialIdeal::unit(2).alexander_dual(&md([1, 1])).unwrap(),
            MonomialIdeal::zero(2)
        );
        assert!(matches!(
            MonomialIdeal::from_exponents(&[[2]]).alexander_dual(&md([1])),
            Err(Error::NotTDetermined { .. })
        ));
    }

    #[test]
    fn order_ideal_counts() {
        // Lattice paths in a 3x3 grid, and the free distributive lattice on 3 generators.
        assert_eq!(all_profiles(&md([2, 2])).len(), 20);
        assert_eq!(all_profiles(&md([1, 1, 1])).len(), 20);
        assert_eq!(all_profiles(&md([3])).len(), 5);
        for p in all_profiles(&md([2, 1])) {
            assert!(p.is_downward_closed());
        }
    }

    #[test]
    fn duality_is_an_involution_and_complements_degrees() {
        for t in [md([2, 2]), md([1, 1, 1]), md([3, 1])] {
            for i in all_t_determined(&t) {
                let d = i.alexander_dual(&t).unwrap();
                assert_eq!(d.alexander_dual(&t).unwrap(), i, "I = {i}");
                for a in DegreeBox::up_to(&t).iter() {
                    assert_eq!(i.contains(&a), !d.contains(&t.sub(&a)), "I = {i}, a = {a}");
                }
            }
        }
    }

    #[test]
    fn peaks_and_indents_examples() {
        let i = MonomialIdeal::from_exponents(&[[2, 0], [0, 2]]);
        let t = md([2, 2]);
        assert_eq!(i.peaks(&t).unwrap(), vec![md([1, 1])]);
        assert_eq!(i.indents(&t).unwrap(), vec![md([0, 2]), md([2, 0])]);
        let z = MonomialIdeal::zero(2);
        assert_eq!(z.peaks(&md([1, 1])).unwrap(), vec![md([1, 1])]);
        assert!(z.indents(&md([1, 1])).unwrap().is_empty());
        let x = MonomialIdeal::from_exponents(&[[1]]);
        assert_eq!(x.peaks(&md([2])).unwrap(), vec![md([0])]);
        assert_eq!(x.indents(&md([2])).unwrap(), vec![md([1])]);
    }

    #[test]
    fn indents_are_generators_and_peaks_are_maximal() {
        for t in [md([2, 2]), md([1, 1, 1])] {
            for p in all_profiles(&t) {
                let i = p.ideal();
                assert_eq!(i.indents(&t).unwrap(), i.gens().to_vec());
                let sup = p.support();
                for y in i.peaks(&t).unwrap() {
                    assert!(sup.iter().all(|x| !y.lt(x)));
                }
                assert_eq!(i.support_profile(&t).unwrap(), p);
            }
        }
    }

    #[test]
    fn indent_on_a_coordinate_hyperplane() {
        // (S/I)_y = 0 with a zero coordinate does not force I = S.
        let i = MonomialIdeal::from_exponents(&[[0, 2]]);
        assert_eq!(i.indents(&md([2, 2])).unwrap(), vec![md([0, 2])]);
    }

    #[test]
    fn relative_dimension_examples() {
        assert_eq!(
            relative_dimension(&md([1, 1]), &md([1, 2]), Relative::Below).unwrap(),
            1
        );
        assert_eq!(
            relative_dimension(&md([1, 1]), &md([1, 1]), Relative::Above).unwrap(),
            0
        );
        assert_eq!(
            relative_dimension(&md([0, 0, 0]), &md([1, 2, 3]), Relative::Below).unwrap(),
            3
        );
        assert!(relative_dimension(&md([2, 0]), &md([1, 1]), Relative::Below).is_err());
    }

    #[test]
    fn non_order_ideal_rejected() {
        assert!(SupportProfile::from_predicate(&md([1, 1]), |a| a == &md([1, 1])).is_err());
    }

    #[test]
    fn display_uses_variable_names() {
        let i = MonomialIdeal::from_exponents(&[[2, 1, 0], [0, 0, 1]]);
        assert_eq!(i.to_string(), "(z, x^2y)");
        assert_eq!(MonomialIdeal::zero(1).to_string(), "0");
    }
}
