//! Binary words of length `D`, the hypercube and halved-cube vertex sets,
//! and canonical vertex indexing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported word length.
pub const MAX_D: usize = 24;

/// An element of `F_2^D` with its Hamming weight cached.
///
/// Bit `i` of the word is bit `i` of `bits`; the textual form is the binary
/// numeral of `bits` (most significant bit first), padded to length `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    bits: u32,
    weight: u32,
}

impl BitVector {
    pub const ZERO: BitVector = BitVector { bits: 0, weight: 0 };

    pub fn new(bits: u32) -> Self {
        BitVector { bits, weight: bits.count_ones() }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn weight(self) -> usize {
        self.weight as usize
    }

    pub fn is_even(self) -> bool {
        self.weight.is_multiple_of(2)
    }

    /// Sum in `F_2^D` (bitwise xor); also the difference.
    pub fn xor(self, other: BitVector) -> BitVector {
        BitVector::new(self.bits ^ other.bits)
    }

    pub fn to_bit_string(self, d: usize) -> String {
        format!("{:0width$b}", self.bits, width = d)
    }

    /// Parses a string of `0`/`1`; the word length is the string length.
    pub fn from_bit_string(s: &str) -> Result<(Self, usize)> {
        let d = s.len();
        if d == 0 || d > MAX_D || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::Parse(format!("`{s}` is not a binary word of length 1..={MAX_D}")));
        }
        let bits = u32::from_str_radix(s, 2).map_err(|e| Error::Parse(e.to_string()))?;
        Ok((BitVector::new(bits), d))
    }
}

/// Number of ones in `x`.
pub fn hamming_weight(x: BitVector) -> usize {
    x.weight()
}

/// The two graph families on binary words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `H(D,2)`: all words, adjacent at Hamming distance 1.
    Hypercube,
    /// `1/2 H(D,2)`: even-weight words, adjacent at Hamming distance 2.
    HalvedCube,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::HalvedCube => "halved-cube",
        }
    }

    pub fn contains(self, x: BitVector) -> bool {
        match self {
            Family::Hypercube => true,
            Family::HalvedCube => x.is_even(),
        }
    }

    pub fn diameter(self, d: usize) -> usize {
        match self {
            Family::Hypercube => d,
            Family::HalvedCube => d / 2,
        }
    }

    /// Canonical index of a word known to be a vertex of this family.
    ///
    /// Even-weight words are ordered like their top `D-1` bits, since the
    /// lowest bit is determined by the others.
    pub fn word_index(self, bits: u32) -> usize {
        match self {
            Family::Hypercube => bits as usize,
            Family::HalvedCube => (bits >> 1) as usize,
        }
    }

    pub fn vertex_count(self, d: usize) -> usize {
        match self {
            Family::Hypercube => 1 << d,
            Family::HalvedCube => 1 << (d - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_d(d: usize) -> Result<()> {
    if !(3..=MAX_D).contains(&d) {
        return Err(Error::DimensionOutOfRange(d, "3 <= D <= 24"));
    }
    Ok(())
}

/// All vertices of the family in canonical (ascending integer) order.
pub fn enumerate_vertices(d: usize, family: Family) -> Result<Vec<BitVector>> {
    check_d(d)?;
    Ok((0..1u32 << d).map(BitVector::new).filter(|&x| family.contains(x)).collect())
}

/// Path-length distance between two vertices of the family.
pub fn distance(x: BitVector, y: BitVector, family: Family) -> Result<usize> {
    let w = x.xor(y).weight();
    match family {
        Family::Hypercube => Ok(w),
        Family::HalvedCube => {
            if !x.is_even() || !y.is_even() || !w.is_multiple_of(2) {
                return Err(Error::InvalidVertex(format!("pair ({:b}, {:b})", x.bits(), y.bits()), "halved cube"));
            }
            Ok(w / 2)
        }
    }
}

/// A graph family at a fixed `D` with a chosen base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphContext {
    d: usize,
    family: Family,
    vertices: Vec<BitVector>,
    base: BitVector,
    masks: Vec<u32>,
}

impl GraphContext {
    /// Context with the zero word as base vertex.
    pub fn new(d: usize, family: Family) -> Result<Self> {
        Self::with_base(d, family, BitVector::ZERO)
    }

    pub fn with_base(d: usize, family: Family, base: BitVector) -> Result<Self> {
        check_d(d)?;
        if base.bits() >> d != 0 || !family.contains(base) {
            return Err(Error::InvalidVertex(base.to_bit_string(d), family_label(family)));
        }
        let vertices = enumerate_vertices(d, family)?;
        let masks = match family {
            Family::Hypercube => (0..d).map(|i| 1u32 << i).collect(),
            Family::HalvedCube => (0..d).flat_map(|i| (i + 1..d).map(move |j| (1u32 << i) | (1u32 << j))).collect(),
        };
        Ok(GraphContext { d, family, vertices, base, masks })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn vertices(&self) -> &[BitVector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn base_vertex(&self) -> BitVector {
        self.base
    }

    pub fn base_index(&self) -> usize {
        self.index_of(self.base).expect("base vertex is a member")
    }

    pub fn diameter(&self) -> usize {
        self.family.diameter(self.d)
    }

    /// Valency `b_0`.
    pub fn valency(&self) -> usize {
        match self.family {
            Family::Hypercube => self.d,
            Family::HalvedCube => self.d * (self.d - 1) / 2,
        }
    }

    /// Position of `x` in the canonical order.
    pub fn index_of(&self, x: BitVector) -> Option<usize> {
        if x.bits() >> self.d != 0 || !self.family.contains(x) {
            return None;
        }
        Some(self.family.word_index(x.bits()))
    }

    pub fn distance(&self, x: BitVector, y: BitVector) -> Result<usize> {
        distance(x, y, self.family)
    }

    /// Hamming weight of `y - x` for the base vertex `x`: the weight shell of `y`.
    pub fn shell_of(&self, y: BitVector) -> usize {
        self.base.xor(y).weight()
    }

    /// Xor masks taking a vertex to its neighbors: single bits for the
    /// hypercube, pairs of bits for the halved cube, in ascending bit order.
    pub fn neighbor_masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn neighbors(&self, y: BitVector) -> impl Iterator<Item = BitVector> + '_ {
        self.masks.iter().map(move |m| BitVector::new(y.bits() ^ m))
    }

    /// Indices of the even-weight words inside `F_2^D` (the halved-cube
    /// vertex set) in canonical order.
    pub fn even_indices(&self) -> Vec<usize> {
        self.vertices.iter().enumerate().filter(|(_, v)| v.is_even()).map(|(i, _)| i).collect()
    }

    /// The other family on the same `D` with the same base vertex.
    pub fn sibling(&self, family: Family) -> Result<GraphContext> {
        GraphContext::with_base(self.d, family, self.base)
    }
}

fn family_label(f: Family) -> &'static str {
    match f {
        Family::Hypercube => "hypercube",
        Family::HalvedCube => "halved cube",
    }
}
