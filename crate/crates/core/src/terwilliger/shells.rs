use serde::{Deserialize, Serialize};

use crate::binary::{BitVector, GraphContext};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational};

/// The weight shells of `F_2^D` around a base vertex.
///
/// Shell `s` holds the vertices `y` with `w(y - x) = s`. Inside a shell the
/// vertices are ordered by the integer value of `y + x`.
#[derive(Clone, Debug)]
pub struct ShellIndex {
    d: usize,
    base: u32,
    /// Relative words `y + x` of each shell, ascending.
    words: Vec<Vec<u32>>,
    /// Position of each relative word inside its shell.
    position: Vec<u32>,
}

impl ShellIndex {
    pub fn new(d: usize, base: BitVector) -> Self {
        let mut words = vec![Vec::new(); d + 1];
        let mut position = vec![0u32; 1 << d];
        for w in 0u32..1 << d {
            let shell = &mut words[w.count_ones() as usize];
            position[w as usize] = shell.len() as u32;
            shell.push(w);
        }
        ShellIndex { d, base: base.bits(), words, position }
    }

    pub fn for_context(ctx: &GraphContext) -> Self {
        Self::new(ctx.d(), ctx.base_vertex())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn base(&self) -> BitVector {
        BitVector::new(self.base)
    }

    pub fn shell_size(&self, shell: usize) -> usize {
        self.words[shell].len()
    }

    /// Vertices of a shell, in shell order.
    pub fn shell_vertices(&self, shell: usize) -> impl Iterator<Item = BitVector> + '_ {
        self.words[shell].iter().map(move |w| BitVector::new(w ^ self.base))
    }

    fn pos(&self, relative: u32) -> usize {
        self.position[relative as usize] as usize
    }

    /// `R v`: the part of the hypercube adjacency raising the shell by one.
    pub fn raise(&self, v: &ShellVector) -> ShellVector {
        let s = v.shell + 1;
        if s > self.d {
            return ShellVector::zero_beyond(s);
        }
        let coords = self.words[s]
            .iter()
            .map(|&z| {
                let mut acc = Rational::ZERO;
                for_each_bit(z, |b| acc += &v.coords[self.pos(z ^ b)]);
                acc
            })
            .collect();
        ShellVector { shell: s, coords }
    }

    /// `L v`: the part of the hypercube adjacency lowering the shell by one.
    pub fn lower(&self, v: &ShellVector) -> ShellVector {
        if v.shell == 0 {
            return ShellVector::zero_beyond(usize::MAX);
        }
        let s = v.shell - 1;
        let full = (1u32 << self.d) - 1;
        let coords = self.words[s]
            .iter()
            .map(|&z| {
                let mut acc = Rational::ZERO;
                for_each_bit(!z & full, |b| acc += &v.coords[self.pos(z | b)]);
                acc
            })
            .collect();
        ShellVector { shell: s, coords }
    }

    /// Halved-cube adjacency applied to a vector on an even shell, computed
    /// directly from the weight-two masks and split into its components on
    /// shells `s - 2`, `s` and `s + 2`. Components falling outside `0..=D`
    /// are reported as empty zero vectors.
    pub fn halved_adjacency(&self, v: &ShellVector) -> [ShellVector; 3] {
        let s = v.shell;
        let full = (1u32 << self.d) - 1;
        let down = if s >= 2 {
            let coords = self.words[s - 2]
                .iter()
                .map(|&z| {
                    let mut acc = Rational::ZERO;
                    for_each_pair(!z & full, |m| acc += &v.coords[self.pos(z | m)]);
                    acc
                })
                .collect();
            ShellVector { shell: s - 2, coords }
        } else {
            ShellVector::zero_beyond(usize::MAX)
        };
        let flat_coords = self.words[s]
            .iter()
            .map(|&z| {
                let mut acc = Rational::ZERO;
                for_each_bit(z, |out| for_each_bit(!z & full, |inn| acc += &v.coords[self.pos(z ^ out ^ inn)]));
                acc
            })
            .collect();
        let flat = ShellVector { shell: s, coords: flat_coords };
        let up = if s + 2 <= self.d {
            let coords = self.words[s + 2]
                .iter()
                .map(|&z| {
                    let mut acc = Rational::ZERO;
                    for_each_pair(z, |m| acc += &v.coords[self.pos(z ^ m)]);
                    acc
                })
                .collect();
            ShellVector { shell: s + 2, coords }
        } else {
            ShellVector::zero_beyond(s + 2)
        };
        [down, flat, up]
    }

    /// The lowering map from shell `s` to shell `s - 1` as a 0-1 matrix
    /// (rows indexed by shell `s - 1`, columns by shell `s`).
    pub fn lowering_block(&self, s: usize) -> QMatrix {
        assert!(s >= 1 && s <= self.d, "shell out of range");
        QMatrix::from_fn(self.words[s - 1].len(), self.words[s].len(), |i, j| {
            let (lo, hi) = (self.words[s - 1][i], self.words[s][j]);
            if lo & hi == lo {
                Rational::ONE
            } else {
                Rational::ZERO
            }
        })
    }

    /// Embeds a shell vector in the standard module of `ctx`, in canonical
    /// vertex order. Vertices outside the family must carry zero weight.
    pub fn to_standard(&self, v: &ShellVector, ctx: &GraphContext) -> Result<Vec<Rational>> {
        if ctx.d() != self.d || ctx.base_vertex().bits() != self.base {
            return Err(Error::InvalidArgument("context does not match the shell index".into()));
        }
        let mut out = vec![Rational::ZERO; ctx.vertex_count()];
        if v.is_zero() {
            return Ok(out);
        }
        for (y, c) in self.shell_vertices(v.shell).zip(&v.coords) {
            match ctx.index_of(y) {
                Some(i) => out[i] = c.clone(),
                None if c.is_zero() => {}
                None => {
                    return Err(Error::Verification(format!(
                        "vector has weight at {} outside the {} vertex set",
                        y.to_bit_string(self.d),
                        ctx.family()
                    )))
                }
            }
        }
        Ok(out)
    }
}

fn for_each_bit(mut word: u32, mut f: impl FnMut(u32)) {
    while word != 0 {
        let b = word & word.wrapping_neg();
        f(b);
        word ^= b;
    }
}

fn for_each_pair(word: u32, mut f: impl FnMut(u32)) {
    let mut rest = word;
    while rest != 0 {
        let b = rest & rest.wrapping_neg();
        rest ^= b;
        for_each_bit(rest, |c| f(b | c));
    }
}

/// A vector of the standard module supported on one weight shell, stored by
/// its coordinates in shell order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellVector {
    pub shell: usize,
    pub coords: Vec<Rational>,
}

impl ShellVector {
    /// The zero vector on a shell that does not exist.
    fn zero_beyond(shell: usize) -> Self {
        ShellVector { shell, coords: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> ShellVector {
        ShellVector { shell: self.shell, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// The scalar `c` with `self = c * basis`, if there is one.
    pub fn ratio_to(&self, basis: &ShellVector) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::ZERO);
        }
        if self.shell != basis.shell || self.coords.len() != basis.coords.len() {
            return None;
        }
        let p = basis.coords.iter().position(|x| !x.is_zero())?;
        let c = &self.coords[p] / &basis.coords[p];
        self.coords.iter().zip(&basis.coords).all(|(x, b)| *x == &c * b).then_some(c)
    }
}
