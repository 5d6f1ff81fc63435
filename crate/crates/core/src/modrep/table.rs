use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::degree::{DegreeBox, Multidegree};
use crate::linalg::{cohomology, complex::induced_map_with, ChainMap, Field};

use super::ComplexOfReps;

/// `dim Hⁱ(..)_r` over `r ∈ [0,t]`, optionally with the ranks of
/// `xⱼ : Hⁱ(..)_{r−εⱼ} → Hⁱ(..)_r`. Only nonzero values are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub t: Multidegree,
    pub dims: BTreeMap<(i32, Multidegree), usize>,
    pub mult: Option<BTreeMap<(i32, Multidegree, usize), usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimEntry {
    pub i: i32,
    pub r: Multidegree,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultEntry {
    pub i: i32,
    pub r: Multidegree,
    pub j: usize,
    pub mult_rank: usize,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    t: Multidegree,
    entries: Vec<DimEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<Vec<MultEntry>>,
}

impl Serialize for CohomologyTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableRepr {
            t: self.t.clone(),
            entries: self.entries(),
            mult: self.mult.as_ref().map(|m| {
                m.iter()
                    .map(|((i, r, j), &mult_rank)| MultEntry {
                        i: *i,
                        r: r.clone(),
                        j: *j,
                        mult_rank,
                    })
                    .collect()
            }),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CohomologyTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = TableRepr::deserialize(d)?;
        let mut table = CohomologyTable::empty(&repr.t);
        for e in repr.entries {
            table.set(e.i, e.r, e.dim);
        }
        table.mult = repr.mult.map(|m| {
            m.into_iter()
                .filter(|e| e.mult_rank > 0)
                .map(|e| ((e.i, e.r, e.j), e.mult_rank))
                .collect()
        });
        Ok(table)
    }
}

impl CohomologyTable {
    pub fn empty(t: &Multidegree) -> Self {
        CohomologyTable {
            t: t.clone(),
            dims: BTreeMap::new(),
            mult: None,
        }
    }

    pub fn get(&self, i: i32, r: &Multidegree) -> usize {
        self.dims.get(&(i, r.clone())).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: i32, r: Multidegree, dim: usize) {
        if dim == 0 {
            self.dims.remove(&(i, r));
        } else {
            self.dims.insert((i, r), dim);
        }
    }

    pub fn mult_rank(&self, i: i32, r: &Multidegree, j: usize) -> Option<usize> {
        self.mult
            .as_ref()
            .map(|m| m.get(&(i, r.clone(), j)).copied().unwrap_or(0))
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Rows sorted by `(i, r)`.
    pub fn entries(&self) -> Vec<DimEntry> {
        self.dims
            .iter()
            .map(|((i, r), &dim)| DimEntry {
                i: *i,
                r: r.clone(),
                dim,
            })
            .collect()
    }

    /// Cohomological degrees with some nonzero entry.
    pub fn degrees(&self) -> Vec<i32> {
        let mut out: Vec<i32> = self.dims.keys().map(|(i, _)| *i).collect();
        out.dedup();
        out
    }

    /// `Σ_r dim Hⁱ(..)_r`.
    pub fn total(&self, i: i32) -> usize {
        self.dims
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, d)| d)
            .sum()
    }

    /// Moves every entry from degree `i` to `i + by`.
    pub fn shifted(&self, by: i32) -> CohomologyTable {
        CohomologyTable {
            t: self.t.clone(),
            dims: self
                .dims
                .iter()
                .map(|((i, r), &d)| ((i + by, r.clone()), d))
                .collect(),
            mult: self.mult.as_ref().map(|m| {
                m.iter()
                    .map(|((i, r, j), &d)| ((i + by, r.clone(), *j), d))
                    .collect()
            }),
        }
    }

    /// The same table with multiplication ranks dropped.
    pub fn dims_only(&self) -> CohomologyTable {
        CohomologyTable {
            t: self.t.clone(),
            dims: self.dims.clone(),
            mult: None,
        }
    }

    /// Entries where the two tables differ, as `(i, r, self, other)`.
    pub fn diff(&self, other: &CohomologyTable) -> Vec<(i32, Multidegree, usize, usize)> {
        let mut keys: Vec<&(i32, Multidegree)> =
            self.dims.keys().chain(other.dims.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(i, r)| {
                let (a, b) = (self.get(*i, r), other.get(*i, r));
                (a != b).then(|| (*i, r.clone(), a, b))
            })
            .collect()
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return writeln!(f, "(all zero)");
        }
        for ((i, r), d) in &self.dims {
            writeln!(f, "H^{i} at {r}: {d}")?;
        }
        if let Some(m) = &self.mult {
            for ((i, r, j), rank) in m {
                writeln!(
                    f,
                    "x_{} : H^{i} at {} -> {r}: rank {rank}",
                    j + 1,
                    r.shifted(*j, -1)
                )?;
            }
        }
        Ok(())
    }
}

/// Cohomology of every slice `C_r`, `r ∈ [0,t]`, computed in parallel.
pub fn cohomology_table<F: Field>(
    c: &ComplexOfReps,
    field: &F,
    with_mult: bool,
) -> CohomologyTable {
    let t = c.t().clone();
    let bx = DegreeBox::up_to(&t);
    let points: Vec<Multidegree> = bx.iter().collect();
    let mut table = CohomologyTable::empty(&t);
    if !with_mult {
        let rows: Vec<_> = points
            .par_iter()
            .map(|r| (r.clone(), c.slice(r).cohomology_dims(field)))
            .collect();
        for (r, dims) in rows {
            for (i, d) in dims {
                table.set(i, r.clone(), d);
            }
        }
        return table;
    }
    let slices: Vec<_> = points.par_iter().map(|r| c.slice(r)).collect();
    let bases: Vec<_> = slices.par_iter().map(|s| cohomology(field, s)).collect();
    for (r, basis) in points.iter().zip(&bases) {
        for (i, d) in basis.dims() {
            table.set(i, r.clone(), d);
        }
    }
    let jobs: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|k| (0..t.len()).map(move |j| (k, j)))
        .filter(|&(k, j)| points[k].get(j) > 0)
        .collect();
    let ranks: Vec<_> = jobs
        .par_iter()
        .map(|&(k, j)| {
            let r = &points[k];
            let below = r.shifted(j, -1);
            let kb = bx.index(&below).unwrap();
            let f = ChainMap::new(
                c.lo(),
                (c.lo()..=c.hi()).map(|i| c.mult(i, j, &below)).collect(),
            );
            let map = induced_map_with(field, &slices[kb], &slices[k], &f, &bases[kb], &bases[k]);
            (r.clone(), j, map.ranks(field))
        })
        .collect();
    let mut mult = BTreeMap::new();
    for (r, j, rs) in ranks {
        for (i, rank) in rs {
            if rank > 0 {
                mult.insert((i, r.clone(), j), rank);
            }
        }
    }
    table.mult = Some(mult);
    table
}
