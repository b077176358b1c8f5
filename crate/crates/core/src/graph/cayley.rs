use crate::binary::{Family, GraphContext};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational};

/// A vertex-indexed matrix whose `(y, z)` entry depends only on `y + z`.
///
/// Both vertex sets are groups under xor and both graphs are Cayley graphs
/// on them, so every element of the Bose-Mesner algebra has this form. The
/// matrix is stored as its kernel `f`, indexed canonically, with
/// `M[y][z] = f(y + z)`; the kernel is also the column of the zero word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyMatrix {
    d: usize,
    family: Family,
    kernel: Vec<Rational>,
}

impl CayleyMatrix {
    pub fn from_kernel(ctx: &GraphContext, kernel: Vec<Rational>) -> Result<Self> {
        if kernel.len() != ctx.vertex_count() {
            return Err(Error::ShapeMismatch(format!(
                "kernel of length {} for {} vertices",
                kernel.len(),
                ctx.vertex_count()
            )));
        }
        Ok(CayleyMatrix { d: ctx.d(), family: ctx.family(), kernel })
    }

    /// Kernel given as a function of the word.
    pub fn from_fn(ctx: &GraphContext, f: impl Fn(u32) -> Rational) -> Self {
        let kernel = ctx.vertices().iter().map(|v| f(v.bits())).collect();
        CayleyMatrix { d: ctx.d(), family: ctx.family(), kernel }
    }

    pub fn identity(ctx: &GraphContext) -> Self {
        Self::from_fn(ctx, |w| if w == 0 { Rational::ONE } else { Rational::ZERO })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> usize {
        self.kernel.len()
    }

    pub fn kernel(&self) -> &[Rational] {
        &self.kernel
    }

    /// Kernel value at the word `w`.
    pub fn at_word(&self, w: u32) -> &Rational {
        &self.kernel[self.family.word_index(w)]
    }

    /// Entry `(y, z)` for vertex words `y`, `z`.
    pub fn entry(&self, y: u32, z: u32) -> &Rational {
        self.at_word(y ^ z)
    }

    pub fn to_dense(&self, ctx: &GraphContext) -> QMatrix {
        let vs = ctx.vertices();
        QMatrix::from_fn(vs.len(), vs.len(), |i, j| self.entry(vs[i].bits(), vs[j].bits()).clone())
    }

    fn with_kernel(&self, kernel: Vec<Rational>) -> Self {
        CayleyMatrix { d: self.d, family: self.family, kernel }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.family != other.family || self.d != other.d {
            return Err(Error::ShapeMismatch("Cayley matrices over different groups".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let kernel = self.kernel.iter().zip(&other.kernel).map(|(a, b)| a + b).collect();
        Ok(self.with_kernel(kernel))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with_kernel(self.kernel.iter().map(|x| x * c).collect())
    }

    /// Entrywise product; on kernels it is the pointwise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let kernel = self.kernel.iter().zip(&other.kernel).map(|(a, b)| a * b).collect();
        Ok(self.with_kernel(kernel))
    }

    /// `M v` by direct summation over the kernel.
    pub fn apply(&self, ctx: &GraphContext, v: &[Rational]) -> Vec<Rational> {
        let vs = ctx.vertices();
        vs.iter()
            .map(|y| {
                let mut acc = Rational::ZERO;
                for (z, x) in vs.iter().zip(v) {
                    acc.add_mul(self.entry(y.bits(), z.bits()), x);
                }
                acc
            })
            .collect()
    }

    /// Restriction of a hypercube matrix to the even-weight words.
    ///
    /// The restriction is an operator on `C^X` only when the blocks linking
    /// even and odd words vanish, i.e. when the kernel is zero on odd words;
    /// that is checked and reported as a verification error otherwise.
    pub fn restrict_to_even(&self, halved: &GraphContext) -> Result<CayleyMatrix> {
        if self.family != Family::Hypercube || halved.family() != Family::HalvedCube || halved.d() != self.d {
            return Err(Error::InvalidArgument("restriction maps a hypercube matrix to the halved cube".into()));
        }
        if let Some(w) =
            (0..self.kernel.len() as u32).find(|w| w.count_ones() % 2 == 1 && !self.kernel[*w as usize].is_zero())
        {
            return Err(Error::Verification(format!(
                "even-weight subspace is not invariant: kernel entry at odd word {w:b} is {}",
                self.kernel[w as usize]
            )));
        }
        Ok(CayleyMatrix::from_fn(halved, |w| self.kernel[w as usize].clone()))
    }
}
