//! First-order differential operators on three-component wavefunctions.
//!
//! An operator acts as
//!
//! ```text
//! (O f)(p) = A(p) f(p) + Σ_i b_i(p) ∂f/∂p^i
//! ```
//!
//! with a 3×3 expression matrix `A` and scalar derivative coefficients `b_i`.
//! Because the `b_i` are scalars the class is closed under sums,
//! commutators and conjugation by multiplicative (anti)unitaries, which is
//! all the catalog needs.

pub mod zero;

use std::ops::{Add, Neg, Sub};

use num_complex::Complex;

use crate::expr::Expr;
use crate::{Error, Real};

pub use zero::{exprs_vanish, Witness, ZeroTest};

/// 3×3 matrix of expressions.
#[derive(Clone, Debug, PartialEq)]
pub struct MatFn(pub [[Expr; 3]; 3]);

/// Vector of three expressions.
pub type VecFn = [Expr; 3];

impl MatFn {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Expr) -> MatFn {
        MatFn(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn zero() -> MatFn {
        Self::from_fn(|_, _| Expr::zero())
    }

    pub fn identity() -> MatFn {
        Self::scalar(&Expr::one())
    }

    /// `s` times the identity.
    pub fn scalar(s: &Expr) -> MatFn {
        Self::from_fn(|i, j| if i == j { s.clone() } else { Expr::zero() })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[VecFn; 3]) -> MatFn {
        Self::from_fn(|i, j| cols[j][i].clone())
    }

    pub fn get(&self, i: usize, j: usize) -> &Expr {
        &self.0[i][j]
    }

    pub fn column(&self, j: usize) -> VecFn {
        std::array::from_fn(|i| self.0[i][j].clone())
    }

    pub fn map(&self, f: impl Fn(&Expr) -> Expr) -> MatFn {
        Self::from_fn(|i, j| f(&self.0[i][j]))
    }

    pub fn mul(&self, o: &MatFn) -> MatFn {
        Self::from_fn(|i, j| {
            (0..3).fold(Expr::zero(), |acc, k| {
                acc.add(&self.0[i][k].mul(&o.0[k][j]))
            })
        })
    }

    pub fn mul_vec(&self, v: &VecFn) -> VecFn {
        std::array::from_fn(|i| {
            (0..3).fold(Expr::zero(), |acc, k| acc.add(&self.0[i][k].mul(&v[k])))
        })
    }

    pub fn add(&self, o: &MatFn) -> MatFn {
        Self::from_fn(|i, j| self.0[i][j].add(&o.0[i][j]))
    }

    pub fn sub(&self, o: &MatFn) -> MatFn {
        Self::from_fn(|i, j| self.0[i][j].sub(&o.0[i][j]))
    }

    pub fn scale(&self, s: &Expr) -> MatFn {
        self.map(|e| s.mul(e))
    }

    pub fn transpose(&self) -> MatFn {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn conjugate(&self) -> MatFn {
        self.map(Expr::conjugate)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> MatFn {
        Self::from_fn(|i, j| self.0[j][i].conjugate())
    }

    pub fn substitute_neg(&self) -> MatFn {
        self.map(Expr::substitute_neg)
    }

    pub fn diff(&self, axis: usize) -> MatFn {
        self.map(|e| e.diff(axis))
    }

    /// `A B - B A`.
    pub fn commutator(&self, o: &MatFn) -> MatFn {
        self.mul(o).sub(&o.mul(self))
    }

    /// The diagonal value if the matrix is structurally a multiple of the
    /// identity.
    pub fn as_scalar(&self) -> Option<Expr> {
        let offdiag_zero = (0..3).all(|i| (0..3).all(|j| i == j || self.0[i][j].is_zero()));
        let d = &self.0[0][0];
        (offdiag_zero && self.0[1][1] == *d && self.0[2][2] == *d).then(|| d.clone())
    }

    pub fn entries(&self, prefix: &str) -> Vec<(String, Expr)> {
        let mut out = Vec::with_capacity(9);
        for i in 0..3 {
            for j in 0..3 {
                out.push((
                    format!("{prefix}[{}][{}]", i + 1, j + 1),
                    self.0[i][j].clone(),
                ));
            }
        }
        out
    }

    pub fn eval<T: Real>(&self, point: [T; 3]) -> Result<[[Complex<T>; 3]; 3], Error> {
        let mut out = [[Complex::new(T::zero(), T::zero()); 3]; 3];
        for (i, row) in self.0.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                out[i][j] = e.eval(point)?;
            }
        }
        Ok(out)
    }

    /// Checks `V V† = 1` at every point.
    pub fn check_unitary<T: Real>(&self, points: &[[T; 3]], tol: T) -> Result<(), Error> {
        let defect = self.mul(&self.adjoint()).sub(&MatFn::identity());
        match exprs_vanish(&defect.entries("VV†-1"), points, tol)? {
            ZeroTest::Pass => Ok(()),
            ZeroTest::Fail(w) => Err(Error::NotUnitary {
                point: w.point.map(|c| c.to_f64().unwrap_or(f64::NAN)),
                deviation: w.value.norm().to_f64().unwrap_or(f64::NAN),
            }),
        }
    }

    /// Checks that `f ↦ V(p) f(-p)` squares to one (`V(p) V(-p) = 1`), or,
    /// with `antilinear`, that `f ↦ V(p) f*(-p)` does (`V(p) V*(-p) = 1`).
    pub fn check_involution<T: Real>(
        &self,
        points: &[[T; 3]],
        tol: T,
        antilinear: bool,
    ) -> Result<(), Error> {
        let mut reflected = self.substitute_neg();
        if antilinear {
            reflected = reflected.conjugate();
        }
        let defect = self.mul(&reflected).sub(&MatFn::identity());
        match exprs_vanish(&defect.entries("VV(-p)-1"), points, tol)? {
            ZeroTest::Pass => Ok(()),
            ZeroTest::Fail(w) => Err(Error::NotInvolutive {
                point: w.point.map(|c| c.to_f64().unwrap_or(f64::NAN)),
                deviation: w.value.norm().to_f64().unwrap_or(f64::NAN),
            }),
        }
    }
}

/// A three-component momentum-space test function.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveFn(pub VecFn);

impl WaveFn {
    pub fn new(components: VecFn) -> WaveFn {
        WaveFn(components)
    }

    pub fn zero() -> WaveFn {
        WaveFn(std::array::from_fn(|_| Expr::zero()))
    }

    /// `s(p) · v(p)`.
    pub fn scaled(s: &Expr, v: &VecFn) -> WaveFn {
        WaveFn(std::array::from_fn(|i| s.mul(&v[i])))
    }

    pub fn component(&self, i: usize) -> &Expr {
        &self.0[i]
    }

    pub fn add(&self, o: &WaveFn) -> WaveFn {
        WaveFn(std::array::from_fn(|i| self.0[i].add(&o.0[i])))
    }

    pub fn sub(&self, o: &WaveFn) -> WaveFn {
        WaveFn(std::array::from_fn(|i| self.0[i].sub(&o.0[i])))
    }

    pub fn scale(&self, s: &Expr) -> WaveFn {
        WaveFn(std::array::from_fn(|i| s.mul(&self.0[i])))
    }

    pub fn diff(&self, axis: usize) -> WaveFn {
        WaveFn(std::array::from_fn(|i| self.0[i].diff(axis)))
    }

    /// `Σ_i v_i f_i` (no conjugation).
    pub fn dot(&self, v: &VecFn) -> Expr {
        (0..3).fold(Expr::zero(), |acc, i| acc.add(&v[i].mul(&self.0[i])))
    }

    /// `v × f`.
    pub fn cross_from_left(&self, v: &VecFn) -> WaveFn {
        let f = &self.0;
        WaveFn([
            v[1].mul(&f[2]).sub(&v[2].mul(&f[1])),
            v[2].mul(&f[0]).sub(&v[0].mul(&f[2])),
            v[0].mul(&f[1]).sub(&v[1].mul(&f[0])),
        ])
    }

    pub fn entries(&self, prefix: &str) -> Vec<(String, Expr)> {
        (0..3)
            .map(|i| (format!("{prefix}[{}]", i + 1), self.0[i].clone()))
            .collect()
    }

    pub fn eval<T: Real>(&self, point: [T; 3]) -> Result<[Complex<T>; 3], Error> {
        Ok([
            self.0[0].eval(point)?,
            self.0[1].eval(point)?,
            self.0[2].eval(point)?,
        ])
    }

    /// True if every nonzero component contains an exponential factor.
    pub fn is_damped(&self) -> Result<(), Error> {
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() && !c.contains_exp() {
                return Err(Error::Undamped { component: i + 1 });
            }
        }
        Ok(())
    }
}

/// First-order differential operator with a matrix multiplicative part and
/// scalar derivative coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOp {
    pub a: MatFn,
    pub b: VecFn,
}

fn zero_vec() -> VecFn {
    std::array::from_fn(|_| Expr::zero())
}

impl LinOp {
    pub fn new(a: MatFn, b: VecFn) -> LinOp {
        LinOp { a, b }
    }

    pub fn zero() -> LinOp {
        LinOp::multiplicative(MatFn::zero())
    }

    pub fn identity() -> LinOp {
        LinOp::multiplicative(MatFn::identity())
    }

    pub fn multiplicative(a: MatFn) -> LinOp {
        LinOp { a, b: zero_vec() }
    }

    /// Multiplication by the scalar function `s`.
    pub fn scalar(s: &Expr) -> LinOp {
        LinOp::multiplicative(MatFn::scalar(s))
    }

    /// `Σ_i b_i ∂/∂p^i`.
    pub fn derivative(b: VecFn) -> LinOp {
        LinOp {
            a: MatFn::zero(),
            b,
        }
    }

    pub fn is_multiplicative(&self) -> bool {
        self.b.iter().all(Expr::is_zero)
    }

    pub fn scale(&self, s: &Expr) -> LinOp {
        LinOp {
            a: self.a.scale(s),
            b: std::array::from_fn(|i| s.mul(&self.b[i])),
        }
    }

    pub fn apply(&self, f: &WaveFn) -> WaveFn {
        let mut out = WaveFn(self.a.mul_vec(&f.0));
        for (i, bi) in self.b.iter().enumerate() {
            if !bi.is_zero() {
                out = out.add(&f.diff(i).scale(bi));
            }
        }
        out
    }

    /// Closed-form `[self, o]`. Second-order terms cancel because both
    /// derivative parts are scalar.
    pub fn commutator(&self, o: &LinOp) -> LinOp {
        let mut a = self.a.commutator(&o.a);
        let mut b = zero_vec();
        for i in 0..3 {
            let (b1, b2) = (&self.b[i], &o.b[i]);
            if !b1.is_zero() {
                a = a.add(&o.a.diff(i).scale(b1));
                for j in 0..3 {
                    b[j] = b[j].add(&b1.mul(&o.b[j].diff(i)));
                }
            }
            if !b2.is_zero() {
                a = a.sub(&self.a.diff(i).scale(b2));
                for j in 0..3 {
                    b[j] = b[j].sub(&b2.mul(&self.b[j].diff(i)));
                }
            }
        }
        LinOp { a, b }
    }

    /// `self ∘ o`. One factor must be multiplicative, and if the other
    /// differentiates, the multiplicative factor must be a scalar so that the
    /// result keeps scalar derivative coefficients.
    pub fn compose(&self, o: &LinOp) -> Result<LinOp, Error> {
        match (self.is_multiplicative(), o.is_multiplicative()) {
            (true, true) => Ok(LinOp::multiplicative(self.a.mul(&o.a))),
            (true, false) => {
                let s = self.a.as_scalar().ok_or(Error::MatrixDerivative)?;
                Ok(LinOp {
                    a: self.a.mul(&o.a),
                    b: std::array::from_fn(|i| s.mul(&o.b[i])),
                })
            }
            (false, true) => {
                let s = o.a.as_scalar().ok_or(Error::MatrixDerivative)?;
                let mut a = self.a.mul(&o.a);
                for (i, bi) in self.b.iter().enumerate() {
                    if !bi.is_zero() {
                        a = a.add(&o.a.diff(i).scale(bi));
                    }
                }
                Ok(LinOp {
                    a,
                    b: std::array::from_fn(|i| self.b[i].mul(&s)),
                })
            }
            (false, false) => Err(Error::SecondOrder),
        }
    }

    /// Adjoint for the flat scalar product `Σ_i ∫ f_i* g_i d³p`:
    /// `(b ∂)† = -b* ∂ - (∂ b*)`.
    pub fn formal_adjoint(&self) -> LinOp {
        let bc: VecFn = std::array::from_fn(|i| self.b[i].conjugate());
        let div = (0..3).fold(Expr::zero(), |acc, i| acc.add(&bc[i].diff(i)));
        LinOp {
            a: self.a.adjoint().sub(&MatFn::scalar(&div)),
            b: std::array::from_fn(|i| bc[i].neg()),
        }
    }

    /// `V ∘ self ∘ V†` for a multiplicative unitary `V`.
    pub fn unitary_conjugate(&self, v: &MatFn) -> LinOp {
        let vd = v.adjoint();
        let mut a = v.mul(&self.a).mul(&vd);
        for (i, bi) in self.b.iter().enumerate() {
            if !bi.is_zero() {
                a = a.add(&v.mul(&vd.diff(i)).scale(bi));
            }
        }
        LinOp {
            a,
            b: self.b.clone(),
        }
    }

    /// `Π_V ∘ self ∘ Π_V` with `(Π_V f)(p) = V(p) f(-p)`; requires
    /// `V(p) V(-p) = 1`.
    pub fn parity_conjugate(&self, v: &MatFn) -> LinOp {
        self.reflect(v, false)
    }

    /// `Θ_V ∘ self ∘ Θ_V` with `(Θ_V f)(p) = V(p) f*(-p)`; requires
    /// `V(p) V*(-p) = 1`.
    pub fn antiunitary_conjugate(&self, v: &MatFn) -> LinOp {
        self.reflect(v, true)
    }

    fn reflect(&self, v: &MatFn, antilinear: bool) -> LinOp {
        let flip = |e: &Expr| {
            let n = e.substitute_neg();
            if antilinear {
                n.conjugate()
            } else {
                n
            }
        };
        let flip_mat = |m: &MatFn| m.map(flip);
        let a_ref = flip_mat(&self.a);
        let v_ref = flip_mat(v);
        let mut inner = a_ref.mul(&v_ref);
        let b_ref: VecFn = std::array::from_fn(|i| flip(&self.b[i]));
        for (i, bi) in b_ref.iter().enumerate() {
            if !bi.is_zero() {
                inner = inner.add(&flip_mat(&v.diff(i)).scale(bi));
            }
        }
        LinOp {
            a: v.mul(&inner),
            b: std::array::from_fn(|i| b_ref[i].neg()),
        }
    }

    /// Labelled coefficients: `A[i][j]` then `b[i]`, 1-based.
    pub fn entries(&self) -> Vec<(String, Expr)> {
        let mut out = self.a.entries("A");
        out.extend((0..3).map(|i| (format!("b[{}]", i + 1), self.b[i].clone())));
        out
    }

    /// Zero test of every coefficient.
    pub fn is_zero_at<T: Real>(&self, points: &[[T; 3]], tol: T) -> Result<ZeroTest<T>, Error> {
        exprs_vanish(&self.entries(), points, tol)
    }

    /// Multi-line rendering: the multiplicative matrix row by row, then the
    /// derivative coefficients.
    pub fn show(&self) -> String {
        let mut s = String::new();
        for i in 0..3 {
            for j in 0..3 {
                s.push_str(&format!("  A[{}][{}] = {}\n", i + 1, j + 1, self.a.0[i][j]));
            }
        }
        for i in 0..3 {
            s.push_str(&format!("  b[{}] = {}\n", i + 1, self.b[i]));
        }
        s
    }
}

/// `[a, b]`.
pub fn commutator(a: &LinOp, b: &LinOp) -> LinOp {
    a.commutator(b)
}

/// `a ∘ b`, see [`LinOp::compose`].
pub fn compose(a: &LinOp, b: &LinOp) -> Result<LinOp, Error> {
    a.compose(b)
}

impl Add for &LinOp {
    type Output = LinOp;
    fn add(self, o: &LinOp) -> LinOp {
        LinOp {
            a: self.a.add(&o.a),
            b: std::array::from_fn(|i| self.b[i].add(&o.b[i])),
        }
    }
}

impl Sub for &LinOp {
    type Output = LinOp;
    fn sub(self, o: &LinOp) -> LinOp {
        LinOp {
            a: self.a.sub(&o.a),
            b: std::array::from_fn(|i| self.b[i].sub(&o.b[i])),
        }
    }
}

impl Neg for &LinOp {
    type Output = LinOp;
    fn neg(self) -> LinOp {
        self.scale(&Expr::int(-1))
    }
}

impl Add for LinOp {
    type Output = LinOp;
    fn add(self, o: LinOp) -> LinOp {
        &self + &o
    }
}

impl Sub for LinOp {
    type Output = LinOp;
    fn sub(self, o: LinOp) -> LinOp {
        &self - &o
    }
}
