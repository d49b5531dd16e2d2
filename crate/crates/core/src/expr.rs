//! Expression trees over the momentum variables `p1, p2, p3`.
//!
//! Besides the three coordinates the language has two radicals,
//! `r = |p|` and `rho = sqrt(p1^2 + p2^2)`. Every spherical quantity used by
//! the operator catalog is a rational function of these five symbols
//! (`cos θ = p3/r`, `sin θ = rho/r`, `cos φ = p1/rho`, ...), so the language
//! is closed under exact differentiation without trigonometric nodes.
//!
//! Constants are exact Gaussian rationals. The smart constructors fold
//! constants and drop additive/multiplicative identities; no other
//! simplification is attempted, equality of two expressions is decided by
//! sampling (see [`crate::algebra::zero`]).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::{Error, Real};

/// Exact complex rational, the coefficient type of expression constants.
pub type Exact = Complex<Rational64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Radical {
    /// `r = sqrt(p1^2 + p2^2 + p3^2)`.
    R,
    /// `rho = sqrt(p1^2 + p2^2)`, vanishing on the p3 axis.
    Rho,
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radical::R => f.write_str("r"),
            Radical::Rho => f.write_str("rho"),
        }
    }
}

#[derive(Debug, PartialEq)]
pub enum Node {
    Const(Exact),
    /// Coordinate `p^{k+1}` for `k` in `0..3`.
    Var(usize),
    Radical(Radical),
    Add(Expr, Expr),
    Sub(Expr, Expr),
    Mul(Expr, Expr),
    Div(Expr, Expr),
    Pow(Expr, i32),
    Exp(Expr),
}

/// Immutable, cheaply clonable expression handle. Subtrees are shared.
#[derive(Clone, Debug)]
pub struct Expr(Arc<Node>);

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

fn exact(re: i64, im: i64) -> Exact {
    Complex::new(Rational64::from_integer(re), Rational64::from_integer(im))
}

impl Expr {
    fn node(n: Node) -> Self {
        Expr(Arc::new(n))
    }

    pub fn constant(c: Exact) -> Self {
        Self::node(Node::Const(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(exact(n, 0))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::constant(Complex::new(Rational64::new(num, den), Rational64::zero()))
    }

    pub fn complex(re: Rational64, im: Rational64) -> Self {
        Self::constant(Complex::new(re, im))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::constant(exact(0, 1))
    }

    /// Momentum coordinate `p^{axis+1}`, `axis` in `0..3`.
    pub fn p(axis: usize) -> Self {
        assert!(axis < 3, "axis index out of range: {axis}");
        Self::node(Node::Var(axis))
    }

    pub fn r() -> Self {
        Self::node(Node::Radical(Radical::R))
    }

    pub fn rho() -> Self {
        Self::node(Node::Radical(Radical::Rho))
    }

    pub fn node_ref(&self) -> &Node {
        &self.0
    }

    pub fn as_const(&self) -> Option<Exact> {
        match *self.0 {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    /// Structurally the constant zero. A `false` answer says nothing.
    pub fn is_zero(&self) -> bool {
        self.as_const().is_some_and(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_const().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Expr) -> Expr {
        match (self.as_const(), other.as_const()) {
            (Some(a), Some(b)) => Expr::constant(a + b),
            _ if self.is_zero() => other.clone(),
            _ if other.is_zero() => self.clone(),
            _ => Expr::node(Node::Add(self.clone(), other.clone())),
        }
    }

    pub fn sub(&self, other: &Expr) -> Expr {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Expr::zero();
        }
        match (self.as_const(), other.as_const()) {
            (Some(a), Some(b)) => Expr::constant(a - b),
            _ if other.is_zero() => self.clone(),
            _ if self.is_zero() => other.neg(),
            _ => Expr::node(Node::Sub(self.clone(), other.clone())),
        }
    }

    pub fn mul(&self, other: &Expr) -> Expr {
        match (self.as_const(), other.as_const()) {
            (Some(a), Some(b)) => Expr::constant(a * b),
            _ if self.is_zero() || other.is_zero() => Expr::zero(),
            _ if self.is_one() => other.clone(),
            _ if other.is_one() => self.clone(),
            (Some(a), None) => other.scale_by(a),
            (None, Some(b)) => self.scale_by(b),
            _ => Expr::node(Node::Mul(self.clone(), other.clone())),
        }
    }

    // Constant on the left, merged with an existing constant factor.
    fn scale_by(&self, c: Exact) -> Expr {
        if let Node::Mul(a, b) = &*self.0 {
            if let Some(k) = a.as_const() {
                return Expr::constant(c * k).mul(b);
            }
        }
        Expr::node(Node::Mul(Expr::constant(c), self.clone()))
    }

    pub fn div(&self, other: &Expr) -> Expr {
        match (self.as_const(), other.as_const()) {
            _ if self.is_zero() => Expr::zero(),
            _ if other.is_one() => self.clone(),
            (Some(a), Some(b)) if !b.is_zero() => Expr::constant(a / b),
            (_, Some(b)) if !b.is_zero() => self.scale_by(Exact::one() / b),
            _ => Expr::node(Node::Div(self.clone(), other.clone())),
        }
    }

    pub fn neg(&self) -> Expr {
        self.mul(&Expr::int(-1))
    }

    pub fn powi(&self, n: i32) -> Expr {
        match n {
            0 => Expr::one(),
            1 => self.clone(),
            _ => match self.as_const() {
                Some(c) if n > 0 || !c.is_zero() => Expr::constant(c.powi(n)),
                _ => Expr::node(Node::Pow(self.clone(), n)),
            },
        }
    }

    pub fn exp(&self) -> Expr {
        if self.is_zero() {
            Expr::one()
        } else {
            Expr::node(Node::Exp(self.clone()))
        }
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Exact partial derivative with respect to `p^{axis+1}`.
    pub fn diff(&self, axis: usize) -> Expr {
        assert!(axis < 3, "axis index out of range: {axis}");
        let mut memo = HashMap::new();
        self.diff_memo(axis, &mut memo)
    }

    fn diff_memo(&self, axis: usize, memo: &mut HashMap<usize, Expr>) -> Expr {
        if let Some(d) = memo.get(&self.key()) {
            return d.clone();
        }
        let d = match &*self.0 {
            Node::Const(_) => Expr::zero(),
            Node::Var(k) => {
                if *k == axis {
                    Expr::one()
                } else {
                    Expr::zero()
                }
            }
            Node::Radical(Radical::R) => Expr::p(axis).div(self),
            Node::Radical(Radical::Rho) => {
                if axis < 2 {
                    Expr::p(axis).div(self)
                } else {
                    Expr::zero()
                }
            }
            Node::Add(a, b) => a.diff_memo(axis, memo).add(&b.diff_memo(axis, memo)),
            Node::Sub(a, b) => a.diff_memo(axis, memo).sub(&b.diff_memo(axis, memo)),
            Node::Mul(a, b) => {
                let da = a.diff_memo(axis, memo);
                let db = b.diff_memo(axis, memo);
                da.mul(b).add(&a.mul(&db))
            }
            Node::Div(a, b) => {
                // (a/b)' = (a' - (a/b) b') / b
                let da = a.diff_memo(axis, memo);
                let db = b.diff_memo(axis, memo);
                da.sub(&self.mul(&db)).div(b)
            }
            Node::Pow(a, n) => {
                let da = a.diff_memo(axis, memo);
                Expr::int(i64::from(*n)).mul(&a.powi(n - 1)).mul(&da)
            }
            Node::Exp(a) => self.mul(&a.diff_memo(axis, memo)),
        };
        memo.insert(self.key(), d.clone());
        d
    }

    /// Pointwise complex conjugate. Coordinates and radicals are real.
    pub fn conjugate(&self) -> Expr {
        let mut memo = HashMap::new();
        self.map_leaves(&mut memo, &|e| {
            e.as_const().map(|c| Expr::constant(c.conj()))
        })
    }

    /// The substitution `p -> -p`. Both radicals are even.
    pub fn substitute_neg(&self) -> Expr {
        let mut memo = HashMap::new();
        self.map_leaves(&mut memo, &|e| match &*e.0 {
            Node::Var(_) => Some(e.neg()),
            _ => None,
        })
    }

    // Rebuilds the tree with `leaf` applied to every leaf; untouched subtrees
    // keep their identity so sharing survives.
    fn map_leaves(
        &self,
        memo: &mut HashMap<usize, Expr>,
        leaf: &dyn Fn(&Expr) -> Option<Expr>,
    ) -> Expr {
        if let Some(e) = memo.get(&self.key()) {
            return e.clone();
        }
        let rebuilt = match &*self.0 {
            Node::Const(_) | Node::Var(_) | Node::Radical(_) => {
                leaf(self).unwrap_or_else(|| self.clone())
            }
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                let (ma, mb) = (a.map_leaves(memo, leaf), b.map_leaves(memo, leaf));
                if Arc::ptr_eq(&ma.0, &a.0) && Arc::ptr_eq(&mb.0, &b.0) {
                    self.clone()
                } else {
                    match &*self.0 {
                        Node::Add(..) => ma.add(&mb),
                        Node::Sub(..) => ma.sub(&mb),
                        Node::Mul(..) => ma.mul(&mb),
                        _ => ma.div(&mb),
                    }
                }
            }
            Node::Pow(a, n) => {
                let ma = a.map_leaves(memo, leaf);
                if Arc::ptr_eq(&ma.0, &a.0) {
                    self.clone()
                } else {
                    ma.powi(*n)
                }
            }
            Node::Exp(a) => {
                let ma = a.map_leaves(memo, leaf);
                if Arc::ptr_eq(&ma.0, &a.0) {
                    self.clone()
                } else {
                    ma.exp()
                }
            }
        };
        memo.insert(self.key(), rebuilt.clone());
        rebuilt
    }

    /// True if an `exp` node occurs anywhere in the tree.
    pub fn contains_exp(&self) -> bool {
        match &*self.0 {
            Node::Exp(_) => true,
            Node::Const(_) | Node::Var(_) | Node::Radical(_) => false,
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                a.contains_exp() || b.contains_exp()
            }
            Node::Pow(a, _) => a.contains_exp(),
        }
    }

    /// Number of distinct nodes in the shared graph.
    pub fn node_count(&self) -> usize {
        Program::compile(std::slice::from_ref(self)).len()
    }

    pub fn eval<T: Real>(&self, point: [T; 3]) -> Result<Complex<T>, Error> {
        Ok(Program::compile(std::slice::from_ref(self)).eval(point)?[0].value)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Const(c) => write_exact(f, c),
            Node::Var(k) => write!(f, "p{}", k + 1),
            Node::Radical(r) => write!(f, "{r}"),
            Node::Add(a, b) => write!(f, "({a} + {b})"),
            Node::Sub(a, b) => write!(f, "({a} - {b})"),
            Node::Mul(a, b) => write!(f, "{a}*{b}"),
            Node::Div(a, b) => write!(f, "({a})/({b})"),
            Node::Pow(a, n) => write!(f, "({a})^{n}"),
            Node::Exp(a) => write!(f, "exp({a})"),
        }
    }
}

fn write_exact(f: &mut fmt::Formatter<'_>, c: &Exact) -> fmt::Result {
    if c.im.is_zero() {
        if c.re.is_integer() && c.re >= Rational64::zero() {
            write!(f, "{}", c.re)
        } else {
            write!(f, "({})", c.re)
        }
    } else if c.re.is_zero() {
        if c.im.is_one() {
            f.write_str("i")
        } else if c.im == -Rational64::one() {
            f.write_str("(-i)")
        } else {
            write!(f, "({}i)", c.im)
        }
    } else {
        write!(f, "({} + {}i)", c.re, c.im)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Expr> for &Expr {
            type Output = Expr;
            fn $m(self, rhs: &Expr) -> Expr {
                Expr::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Div<&Expr> for &Expr {
    type Output = Expr;
    fn div(self, rhs: &Expr) -> Expr {
        Expr::div(self, rhs)
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::neg(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Instr {
    Const(Exact),
    Var(usize),
    Radical(Radical),
    Add(usize, usize),
    Sub(usize, usize),
    Mul(usize, usize),
    /// Numerator, denominator, radicals occurring in the denominator.
    Div(usize, usize, RadicalSet),
    Pow(usize, i32, RadicalSet),
    Exp(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
struct RadicalSet {
    r: bool,
    rho: bool,
}

impl RadicalSet {
    fn union(self, o: RadicalSet) -> RadicalSet {
        RadicalSet {
            r: self.r || o.r,
            rho: self.rho || o.rho,
        }
    }
}

/// Value of an expression at a point, with the accumulated magnitude of the
/// terms that produced it. The magnitude is the scale against which
/// cancellation noise is judged by the zero tests.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluated<T> {
    pub value: Complex<T>,
    pub scale: T,
}

/// A set of expressions flattened into a shared instruction tape.
#[derive(Clone, Debug)]
pub struct Program {
    tape: Vec<Instr>,
    radicals: Vec<RadicalSet>,
    roots: Vec<usize>,
}

impl Program {
    pub fn compile(exprs: &[Expr]) -> Program {
        let mut prog = Program {
            tape: Vec::new(),
            radicals: Vec::new(),
            roots: Vec::with_capacity(exprs.len()),
        };
        let mut index = HashMap::new();
        let mut cse = HashMap::new();
        for e in exprs {
            let slot = prog.emit(e, &mut index, &mut cse);
            prog.roots.push(slot);
        }
        prog
    }

    pub fn len(&self) -> usize {
        self.tape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tape.is_empty()
    }

    /// `index` dedupes shared nodes by address, `cse` structurally equal
    /// subtrees built independently.
    fn emit(
        &mut self,
        e: &Expr,
        index: &mut HashMap<usize, usize>,
        cse: &mut HashMap<Instr, usize>,
    ) -> usize {
        if let Some(&i) = index.get(&e.key()) {
            return i;
        }
        let (instr, rads) = match &*e.0 {
            Node::Const(c) => (Instr::Const(*c), RadicalSet::default()),
            Node::Var(k) => (Instr::Var(*k), RadicalSet::default()),
            Node::Radical(r) => (
                Instr::Radical(*r),
                RadicalSet {
                    r: *r == Radical::R,
                    rho: *r == Radical::Rho,
                },
            ),
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                let ia = self.emit(a, index, cse);
                let ib = self.emit(b, index, cse);
                let rads = self.radicals[ia].union(self.radicals[ib]);
                let instr = match &*e.0 {
                    Node::Add(..) => Instr::Add(ia, ib),
                    Node::Sub(..) => Instr::Sub(ia, ib),
                    Node::Mul(..) => Instr::Mul(ia, ib),
                    _ => Instr::Div(ia, ib, self.radicals[ib]),
                };
                (instr, rads)
            }
            Node::Pow(a, n) => {
                let ia = self.emit(a, index, cse);
                (Instr::Pow(ia, *n, self.radicals[ia]), self.radicals[ia])
            }
            Node::Exp(a) => {
                let ia = self.emit(a, index, cse);
                (Instr::Exp(ia), self.radicals[ia])
            }
        };
        let i = *cse.entry(instr).or_insert_with_key(|instr| {
            self.tape.push(instr.clone());
            self.radicals.push(rads);
            self.tape.len() - 1
        });
        index.insert(e.key(), i);
        i
    }

    /// Evaluates every root at `point`, in root order.
    pub fn eval<T: Real>(&self, point: [T; 3]) -> Result<Vec<Evaluated<T>>, Error> {
        let [x, y, z] = point;
        let rho = (x * x + y * y).sqrt();
        let r = (x * x + y * y + z * z).sqrt();
        let mut vals: Vec<Evaluated<T>> = Vec::with_capacity(self.tape.len());
        for instr in &self.tape {
            let v = match instr {
                Instr::Const(c) => {
                    let value = Complex::new(rat_to::<T>(c.re), rat_to::<T>(c.im));
                    Evaluated {
                        value,
                        scale: value.norm(),
                    }
                }
                Instr::Var(k) => Evaluated {
                    value: Complex::new(point[*k], T::zero()),
                    scale: point[*k].abs(),
                },
                Instr::Radical(Radical::R) => Evaluated {
                    value: Complex::new(r, T::zero()),
                    scale: r,
                },
                Instr::Radical(Radical::Rho) => Evaluated {
                    value: Complex::new(rho, T::zero()),
                    scale: rho,
                },
                Instr::Add(a, b) => Evaluated {
                    value: vals[*a].value + vals[*b].value,
                    scale: vals[*a].scale + vals[*b].scale,
                },
                Instr::Sub(a, b) => Evaluated {
                    value: vals[*a].value - vals[*b].value,
                    scale: vals[*a].scale + vals[*b].scale,
                },
                Instr::Mul(a, b) => Evaluated {
                    value: vals[*a].value * vals[*b].value,
                    scale: vals[*a].scale * vals[*b].scale,
                },
                Instr::Div(a, b, rads) => {
                    let (na, nb) = (vals[*a], vals[*b]);
                    let den = nb.value.norm();
                    if den.is_zero() {
                        return Err(singular(*rads, point, rho, r));
                    }
                    let value = na.value / nb.value;
                    Evaluated {
                        value,
                        scale: na.scale / den + value.norm() * nb.scale / den,
                    }
                }
                Instr::Pow(a, n, rads) => {
                    let na = vals[*a];
                    let base = na.value.norm();
                    if *n < 0 && base.is_zero() {
                        return Err(singular(*rads, point, rho, r));
                    }
                    let value = na.value.powi(*n);
                    let scale = if *n > 0 {
                        na.scale.powi(*n)
                    } else {
                        let k = T::from_i32(-n).unwrap();
                        value.norm() * (T::one() + k * na.scale / base)
                    };
                    Evaluated { value, scale }
                }
                Instr::Exp(a) => {
                    let na = vals[*a];
                    let value = na.value.exp();
                    Evaluated {
                        value,
                        scale: value.norm() * (T::one() + na.scale),
                    }
                }
            };
            vals.push(v);
        }
        Ok(self.roots.iter().map(|&i| vals[i]).collect())
    }

    /// Like [`Program::eval`] without the scale bookkeeping.
    pub fn eval_values<T: Real>(&self, point: [T; 3]) -> Result<Vec<Complex<T>>, Error> {
        let [x, y, z] = point;
        let rho = (x * x + y * y).sqrt();
        let r = (x * x + y * y + z * z).sqrt();
        let zero = |v: &Complex<T>| v.re.is_zero() && v.im.is_zero();
        let mut vals: Vec<Complex<T>> = Vec::with_capacity(self.tape.len());
        for instr in &self.tape {
            let v = match instr {
                Instr::Const(c) => Complex::new(rat_to::<T>(c.re), rat_to::<T>(c.im)),
                Instr::Var(k) => Complex::new(point[*k], T::zero()),
                Instr::Radical(Radical::R) => Complex::new(r, T::zero()),
                Instr::Radical(Radical::Rho) => Complex::new(rho, T::zero()),
                Instr::Add(a, b) => vals[*a] + vals[*b],
                Instr::Sub(a, b) => vals[*a] - vals[*b],
                Instr::Mul(a, b) => vals[*a] * vals[*b],
                Instr::Div(_, b, rads) if zero(&vals[*b]) => {
                    return Err(singular(*rads, point, rho, r))
                }
                Instr::Div(a, b, _) => vals[*a] / vals[*b],
                Instr::Pow(a, n, rads) if *n < 0 && zero(&vals[*a]) => {
                    return Err(singular(*rads, point, rho, r))
                }
                Instr::Pow(a, n, _) => vals[*a].powi(*n),
                Instr::Exp(a) => vals[*a].exp(),
            };
            vals.push(v);
        }
        Ok(self.roots.iter().map(|&i| vals[i]).collect())
    }
}

fn singular<T: Real>(rads: RadicalSet, point: [T; 3], rho: T, r: T) -> Error {
    let radical = if rads.rho && rho.is_zero() {
        Some(Radical::Rho)
    } else if rads.r && r.is_zero() {
        Some(Radical::R)
    } else {
        None
    };
    Error::Singular {
        radical,
        point: point.map(|c| c.to_f64().unwrap_or(f64::NAN)),
    }
}

fn rat_to<T: Real>(q: Rational64) -> T {
    T::from_i64(*q.numer()).unwrap() / T::from_i64(*q.denom()).unwrap()
}
