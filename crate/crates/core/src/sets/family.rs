use std::collections::HashMap;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::sets::SubsetMask;

/// Hard ceiling on family size: trace rows and sign assignments are packed
/// into a `u64`.
pub const MAX_MEMBERS_HARD: usize = 64;

/// Size caps applied when families are built from external input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_members: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 4096,
            max_members: MAX_MEMBERS_HARD,
        }
    }
}

impl Limits {
    pub fn check_elements(&self, n: usize) -> Result<()> {
        if n > self.max_elements {
            return Err(Error::CapExceeded {
                what: "universe size",
                limit: self.max_elements,
                actual: n,
            });
        }
        Ok(())
    }

    pub fn check_members(&self, n: usize) -> Result<()> {
        let limit = self.max_members.min(MAX_MEMBERS_HARD);
        if n > limit {
            return Err(Error::CapExceeded {
                what: "family size",
                limit,
                actual: n,
            });
        }
        Ok(())
    }
}

/// The finite ground set. Elements are indexed in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Universe {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            if out.index.contains_key(&name) {
                return Err(Error::DuplicateElement(name));
            }
            out.index.insert(name.clone(), out.names.len());
            out.names.push(name);
        }
        Ok(out)
    }

    /// Elements named `"0"`, `"1"`, ... `"n-1"`.
    pub fn numbered(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string())).expect("numbered names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn empty_set(&self) -> SubsetMask {
        SubsetMask::empty(self.len())
    }

    pub fn mask_of<'a, I>(&self, names: I) -> Result<SubsetMask>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut mask = self.empty_set();
        for name in names {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownElementName(name.to_string()))?;
            mask.insert(i);
        }
        Ok(mask)
    }

    pub fn names_of(&self, mask: &SubsetMask) -> Vec<String> {
        mask.ones().map(|i| self.names[i].clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub name: String,
    pub mask: SubsetMask,
}

/// A member of a family together with a polarity: `B¹ = B`, `B⁰ = X − B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedMember {
    pub index: usize,
    pub polarity: bool,
}

impl SignedMember {
    pub fn new(index: usize, polarity: bool) -> Self {
        SignedMember { index, polarity }
    }

    pub fn polarity_bit(&self) -> u8 {
        self.polarity as u8
    }
}

/// One sign per family member; bit `j` is the polarity of member `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignAssignment {
    bits: u64,
    len: usize,
}

impl SignAssignment {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_MEMBERS_HARD);
        let bits = if len == 64 { bits } else { bits & ((1u64 << len) - 1) };
        SignAssignment { bits, len }
    }

    pub fn from_signs(signs: &[bool]) -> Self {
        let bits = signs
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &s)| acc | ((s as u64) << j));
        Self::new(bits, signs.len())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn sign(&self, j: usize) -> bool {
        (self.bits >> j) & 1 == 1
    }

    /// Character `j` is the sign of member `j`.
    pub fn to_bitstring(&self) -> String {
        row_bitstring(self.bits, self.len)
    }
}

/// Serialized as its bitstring.
impl serde::Serialize for SignAssignment {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_bitstring())
    }
}

pub(crate) fn row_bitstring(row: u64, width: usize) -> String {
    (0..width)
        .map(|j| if (row >> j) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// A named, ordered list of subsets of a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<Member>,
}

impl SetFamily {
    pub fn new(universe: Universe) -> Self {
        SetFamily {
            universe,
            members: Vec::new(),
        }
    }

    pub fn from_masks<I, S>(universe: Universe, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, SubsetMask)>,
        S: Into<String>,
    {
        let mut family = SetFamily::new(universe);
        for (name, mask) in members {
            family.push(name, mask)?;
        }
        Ok(family)
    }

    /// Convenience constructor over the numbered universe `0..n`; members are
    /// named `M0`, `M1`, ...
    pub fn from_index_sets(n: usize, sets: &[&[usize]]) -> Self {
        let universe = Universe::numbered(n);
        let members = sets
            .iter()
            .enumerate()
            .map(|(j, s)| (format!("M{j}"), SubsetMask::from_indices(n, s.iter().copied())));
        Self::from_masks(universe, members).expect("generated names are distinct")
    }

    pub fn push(&mut self, name: impl Into<String>, mask: SubsetMask) -> Result<()> {
        let name = name.into();
        if mask.width() != self.universe.len() {
            return Err(Error::LengthMismatch {
                expected: self.universe.len(),
                actual: mask.width(),
            });
        }
        if self.members.iter().any(|m| m.name == name) {
            return Err(Error::DuplicateMember(name));
        }
        if self.members.len() >= MAX_MEMBERS_HARD {
            return Err(Error::CapExceeded {
                what: "family size",
                limit: MAX_MEMBERS_HARD,
                actual: self.members.len() + 1,
            });
        }
        self.members.push(Member { name, mask });
        Ok(())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn universe_size(&self) -> usize {
        self.universe.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn member(&self, j: usize) -> &Member {
        &self.members[j]
    }

    pub fn mask(&self, j: usize) -> &SubsetMask {
        &self.members[j].mask
    }

    pub fn signed_mask(&self, s: SignedMember) -> SubsetMask {
        self.members[s.index].mask.signed(s.polarity)
    }

    pub fn masks(&self) -> impl Iterator<Item = &SubsetMask> {
        self.members.iter().map(|m| &m.mask)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.members.iter().position(|m| m.name == name)
    }

    pub fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.len() {
            return Err(Error::InvalidIndex {
                index: j,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// Validates a list of member indices: in range and pairwise distinct.
    pub fn check_indices(&self, indices: &[usize]) -> Result<()> {
        let mut seen = HashSet::new();
        for &j in indices {
            self.check_index(j)?;
            if !seen.insert(j) {
                return Err(Error::DuplicateIndex(j));
            }
        }
        Ok(())
    }

    pub fn check_limits(&self, limits: &Limits) -> Result<()> {
        limits.check_elements(self.universe.len())?;
        limits.check_members(self.len())
    }

    /// Membership signature of every element: bit `j` of row `x` is set iff
    /// `x` belongs to member `j`.
    pub fn rows(&self) -> Vec<u64> {
        let mut rows = vec![0u64; self.universe.len()];
        for (j, m) in self.members.iter().enumerate() {
            for x in m.mask.ones() {
                rows[x] |= 1 << j;
            }
        }
        rows
    }

    /// The family restricted to the listed members, in the listed order.
    pub fn subfamily(&self, indices: &[usize]) -> Result<SetFamily> {
        self.check_indices(indices)?;
        Ok(SetFamily {
            universe: self.universe.clone(),
            members: indices.iter().map(|&j| self.members[j].clone()).collect(),
        })
    }

    /// The first `n` members.
    pub fn prefix(&self, n: usize) -> SetFamily {
        SetFamily {
            universe: self.universe.clone(),
            members: self.members[..n.min(self.len())].to_vec(),
        }
    }

    /// Replaces member `j` by its complement, keeping its name.
    pub fn complement_member(&mut self, j: usize) {
        let m = &mut self.members[j];
        m.mask = m.mask.complement();
    }

    /// Drops members whose mask equals an earlier member's mask.
    pub fn dedupe(&self) -> SetFamily {
        let mut seen = HashSet::new();
        SetFamily {
            universe: self.universe.clone(),
            members: self
                .members
                .iter()
                .filter(|m| seen.insert(m.mask.clone()))
                .cloned()
                .collect(),
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.members.iter().map(|m| m.name.clone()).collect()
    }
}
