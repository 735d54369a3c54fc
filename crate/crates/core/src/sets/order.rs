use crate::error::{Error, Result};
use crate::sets::{SubsetMask, Universe};

/// A linear order on a universe: `permutation()[r]` is the element at rank `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    permutation: Vec<usize>,
}

impl LinearOrder {
    pub fn new(permutation: Vec<usize>) -> Result<Self> {
        let n = permutation.len();
        let mut seen = vec![false; n];
        for &x in &permutation {
            if x >= n {
                return Err(Error::InvalidOrder(format!("element index {x} out of range for {n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidOrder(format!("element index {x} listed twice")));
            }
        }
        Ok(LinearOrder { permutation })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder {
            permutation: (0..n).collect(),
        }
    }

    pub fn from_names<S: AsRef<str>>(universe: &Universe, names: &[S]) -> Result<Self> {
        if names.len() != universe.len() {
            return Err(Error::InvalidOrder(format!(
                "order lists {} elements, universe has {}",
                names.len(),
                universe.len()
            )));
        }
        let perm = names
            .iter()
            .map(|n| {
                universe
                    .index_of(n.as_ref())
                    .ok_or_else(|| Error::UnknownElementName(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(perm)
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.len()];
        for (r, &x) in self.permutation.iter().enumerate() {
            ranks[x] = r;
        }
        ranks
    }

    pub fn reversed(&self) -> Self {
        LinearOrder {
            permutation: self.permutation.iter().rev().copied().collect(),
        }
    }

    pub fn names<'a>(&self, universe: &'a Universe) -> Vec<&'a str> {
        self.permutation.iter().map(|&x| universe.name(x)).collect()
    }

    pub(crate) fn check_width(&self, mask: &SubsetMask) -> Result<()> {
        if mask.width() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: mask.width(),
            });
        }
        Ok(())
    }

    /// Membership of `mask` read along the order.
    pub fn read<'a>(&'a self, mask: &'a SubsetMask) -> impl Iterator<Item = bool> + 'a {
        debug_assert_eq!(mask.width(), self.len());
        self.permutation.iter().map(move |&x| mask.contains(x))
    }
}

/// Number of maximal runs of members of `mask` along `order`.
pub fn convex_components(order: &LinearOrder, mask: &SubsetMask) -> Result<usize> {
    order.check_width(mask)?;
    let mut runs = 0;
    let mut prev = false;
    for inside in order.read(mask) {
        if inside && !prev {
            runs += 1;
        }
        prev = inside;
    }
    Ok(runs)
}
