use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::curvature::{curvature_of_degrees, VertexPattern};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Patterns `(prefix…, k)` sharing a prefix, with curvature `1/k + offset`
/// for every `k` in range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternFamily {
    pub prefix: Vec<usize>,
    pub k_min: usize,
    /// `None` when every `k ≥ k_min` qualifies.
    pub k_max: Option<usize>,
    pub offset: Rational,
}

impl PatternFamily {
    pub fn curvature_at(&self, k: usize) -> Rational {
        Rational::recip_of(k) + self.offset
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= self.k_min && self.k_max.is_none_or(|hi| k <= hi)
    }

    /// Closed form such as `1/k - 1/12`.
    pub fn formula(&self) -> String {
        if self.offset.is_zero() {
            "1/k".to_string()
        } else if self.offset.is_negative() {
            format!("1/k - {}/{}", -self.offset.numer(), self.offset.denom())
        } else {
            format!("1/k + {}/{}", self.offset.numer(), self.offset.denom())
        }
    }

    pub fn range(&self) -> String {
        match self.k_max {
            None => format!("k >= {}", self.k_min),
            Some(hi) => format!("{} <= k <= {}", self.k_min, hi),
        }
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: Vec<String> = self.prefix.iter().map(ToString::to_string).collect();
        write!(f, "({},k)  {}  {}", prefix.join(","), self.range(), self.formula())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternEnumeration {
    pub positive: Vec<PatternFamily>,
    pub vanishing: Vec<VertexPattern>,
}

fn tuples(len: usize, lo: usize, hi: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for d in lo..=hi {
        prefix.push(d);
        tuples(len, d, hi, prefix, out);
        prefix.pop();
    }
}

/// Brute-force search over nondecreasing face-degree tuples of length
/// `vertex_degree` with entries in `3..=k_max`, grouped into families by
/// their first `vertex_degree - 1` entries.
///
/// A family is unbounded when its offset is nonnegative; otherwise its
/// upper end is the last `k` with positive curvature, which must lie below
/// `k_max` for the search to see it.
pub fn enumerate_positive_patterns(vertex_degree: usize, k_max: usize) -> Result<PatternEnumeration> {
    if vertex_degree < 3 {
        return Err(Error::InvalidParameter(format!(
            "vertex degree must be at least 3, got {vertex_degree}"
        )));
    }
    if k_max < 12 {
        return Err(Error::InvalidParameter(format!("k_max must be at least 12, got {k_max}")));
    }
    let mut all = Vec::new();
    tuples(vertex_degree, 3, k_max, &mut Vec::new(), &mut all);

    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut vanishing = Vec::new();
    for t in all {
        let phi = curvature_of_degrees(&t);
        if phi.is_zero() {
            vanishing.push(VertexPattern::new(t));
        } else if phi.is_positive() {
            let (last, prefix) = t.split_last().expect("nonempty");
            groups.entry(prefix.to_vec()).or_default().push(*last);
        }
    }

    let mut positive = Vec::new();
    for (prefix, ks) in groups {
        let offset = curvature_of_degrees(&prefix) - Rational::new(1, 2);
        let k_min = ks[0];
        let k_top = *ks.last().expect("nonempty");
        if ks.len() != k_top - k_min + 1 {
            return Err(Error::InvalidParameter(format!("family {prefix:?} is not contiguous")));
        }
        let k_max_found = if offset.is_negative() {
            if k_top == k_max {
                return Err(Error::InvalidParameter(format!(
                    "family {prefix:?} reaches k_max; raise k_max"
                )));
            }
            Some(k_top)
        } else {
            None
        };
        let family = PatternFamily { prefix, k_min, k_max: k_max_found, offset };
        for &k in &ks {
            let mut full = family.prefix.clone();
            full.push(k);
            debug_assert_eq!(curvature_of_degrees(&full), family.curvature_at(k));
        }
        positive.push(family);
    }
    Ok(PatternEnumeration { positive, vanishing })
}
