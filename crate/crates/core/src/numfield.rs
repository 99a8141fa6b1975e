//! Exact arithmetic in the real field `Q(θ)` with `θ = 2cos(π/L)`.
//!
//! Every canonical-form value `-2cos(π/m)` with `m | L` is a polynomial in `θ`
//! with integer coefficients, so a single context built from the lcm of the
//! finite Coxeter labels carries all geometry of a graph. Elements are stored
//! as reduced residues modulo the minimal polynomial `Ψ` of `θ`, which makes
//! structural equality coincide with field equality.
//!
//! Signs are decided without floating point: `θ` is isolated in a rational
//! bracket certified by a Sturm count, and the bracket is bisected until
//! interval evaluation of the element excludes zero.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of_rational(q: &BigRational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// The field `Q(2cos(π/L))` together with an isolating bracket for its generator.
pub struct FieldContext {
    order: u64,
    minpoly: Vec<BigInt>,
    psi: Vec<BigRational>,
    bracket: (BigRational, BigRational),
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("order", &self.order)
            .field("minpoly", &self.minpoly_string())
            .finish()
    }
}

impl FieldContext {
    /// The shared context for a set of finite labels (each `>= 2`); the
    /// order is their lcm, or 1 for the empty set. Contexts are cached by order.
    pub fn for_labels<I: IntoIterator<Item = u32>>(labels: I) -> Arc<FieldContext> {
        let order = labels.into_iter().fold(1u64, |acc, m| {
            assert!(m >= 2, "finite Coxeter labels are >= 2");
            acc.lcm(&(m as u64))
        });
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldContext>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(ctx) = cache.lock().expect("context cache").get(&order) {
            return ctx.clone();
        }
        let ctx = Arc::new(Self::with_order(order));
        cache
            .lock()
            .expect("context cache")
            .entry(order)
            .or_insert(ctx)
            .clone()
    }

    pub fn with_order(order: u64) -> FieldContext {
        assert!(order >= 1);
        let minpoly = minimal_polynomial(order);
        let psi: Vec<BigRational> = minpoly
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let bracket = isolate_generator(order, &psi);
        FieldContext {
            order,
            minpoly,
            psi,
            bracket,
        }
    }

    /// `L`, the lcm of the finite labels.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Integer coefficients of `Ψ`, lowest degree first.
    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn bracket(&self) -> (&BigRational, &BigRational) {
        (&self.bracket.0, &self.bracket.1)
    }

    pub fn minpoly_string(&self) -> String {
        let mut terms = Vec::new();
        for (k, c) in self.minpoly.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let coeff = if k > 0 && c.is_one() {
                String::new()
            } else if k > 0 && (-c).is_one() {
                "-".to_string()
            } else if k > 0 {
                format!("{c}*")
            } else {
                c.to_string()
            };
            terms.push(format!("{coeff}{mono}"));
        }
        terms.join(" + ").replace("+ -", "- ")
    }

    /// Numerical value of the generator, for display purposes only.
    pub fn theta_f64(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.order as f64).cos()
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for FieldContext {}

/// An element of `Q(θ)` as a reduced polynomial in `θ`.
#[derive(Clone)]
pub struct FieldElement {
    ctx: Arc<FieldContext>,
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
}

/// Dispatches one of the field operations; `b` is required for the binary ones.
pub fn arith(op: ArithOp, a: &FieldElement, b: Option<&FieldElement>) -> Result<FieldElement> {
    let rhs = || b.ok_or_else(|| Error::Parse(format!("{op:?} needs two operands")));
    match op {
        ArithOp::Add => a.checked_add(rhs()?),
        ArithOp::Sub => a.checked_sub(rhs()?),
        ArithOp::Mul => a.checked_mul(rhs()?),
        ArithOp::Neg => Ok(-a),
        ArithOp::Inv => a.inv(),
    }
}

impl FieldElement {
    pub fn zero(ctx: &Arc<FieldContext>) -> FieldElement {
        FieldElement {
            ctx: ctx.clone(),
            coeffs: vec![BigRational::zero(); ctx.degree()],
        }
    }

    pub fn one(ctx: &Arc<FieldContext>) -> FieldElement {
        Self::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &Arc<FieldContext>, n: i64) -> FieldElement {
        Self::from_rational(ctx, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(ctx: &Arc<FieldContext>, q: BigRational) -> FieldElement {
        let mut e = Self::zero(ctx);
        e.coeffs[0] = q;
        e
    }

    /// The generator `θ = 2cos(π/L)`.
    pub fn theta(ctx: &Arc<FieldContext>) -> FieldElement {
        Self::from_poly(ctx, vec![BigRational::zero(), BigRational::one()])
    }

    /// Reduces an arbitrary rational polynomial in `θ` to canonical form.
    pub fn from_poly(ctx: &Arc<FieldContext>, poly: Vec<BigRational>) -> FieldElement {
        FieldElement {
            ctx: ctx.clone(),
            coeffs: reduce(poly, &ctx.psi),
        }
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn same_context(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.order == other.ctx.order {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.ctx.order, other.ctx.order))
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_context(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_context(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldElement {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_context(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let d = self.coeffs.len();
        if d == 1 {
            return Ok(Self::from_rational(&self.ctx, &self.coeffs[0] * &other.coeffs[0]));
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(Self::from_poly(&self.ctx, prod))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = trim(self.coeffs.clone());
        let (g, u) = poly_gcdext(&a, &self.ctx.psi);
        // Ψ is irreducible, so the gcd is a nonzero constant.
        debug_assert_eq!(g.len(), 1);
        let scale = g[0].recip();
        let u = u.into_iter().map(|c| c * &scale).collect();
        Ok(Self::from_poly(&self.ctx, u))
    }

    pub fn scale(&self, q: &BigRational) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Exact sign of the real number this element denotes.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if let Some(q) = self.as_rational() {
            return Sign::of_rational(q);
        }
        let (mut lo, mut hi) = self.ctx.bracket.clone();
        let psi = &self.ctx.psi;
        let mut psi_lo_sign = Sign::of_rational(&eval(psi, &lo));
        loop {
            let (min, max) = eval_interval(&self.coeffs, &lo, &hi);
            if min.is_positive() {
                return Sign::Positive;
            }
            if max.is_negative() {
                return Sign::Negative;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            let psi_mid = eval(psi, &mid);
            let s = Sign::of_rational(&psi_mid);
            if s == Sign::Zero {
                // θ is rational only in degree one, handled above.
                unreachable!("minimal polynomial of degree > 1 has a rational root");
            }
            if s == psi_lo_sign {
                lo = mid;
                psi_lo_sign = s;
            } else {
                hi = mid;
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    /// Floating-point approximation, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        let theta = self.ctx.theta_f64();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * theta + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Parses the `(c0 + c1*x + ... )` rendering, a bare rational, or a sum of
    /// terms `c`, `c*x`, `c*x^k`, `x^k`.
    pub fn parse(ctx: &Arc<FieldContext>, text: &str) -> Result<FieldElement> {
        let t = text.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Err(Error::Parse(format!("empty field element `{text}`")));
        }
        let mut normalized = String::new();
        let mut prev_significant: Option<char> = None;
        for ch in t.chars() {
            if ch == '-' && !matches!(prev_significant, None | Some('+') | Some('^') | Some('*')) {
                normalized.push('+');
            }
            if !ch.is_whitespace() {
                prev_significant = Some(ch);
                normalized.push(ch);
            }
        }
        let mut poly: Vec<BigRational> = Vec::new();
        for term in normalized.split('+').filter(|s| !s.is_empty()) {
            let (coeff, power) = parse_term(term)
                .ok_or_else(|| Error::Parse(format!("bad term `{term}` in `{text}`")))?;
            if poly.len() <= power {
                poly.resize(power + 1, BigRational::zero());
            }
            poly[power] += coeff;
        }
        Ok(Self::from_poly(ctx, poly))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

fn parse_term(term: &str) -> Option<(BigRational, usize)> {
    let (coeff, mono) = match term.split_once('*') {
        Some((c, m)) => (parse_rational(c)?, m),
        None if term.contains('x') => {
            let (sign, m) = match term.strip_prefix('-') {
                Some(rest) => (-BigRational::one(), rest),
                None => (BigRational::one(), term),
            };
            (sign, m)
        }
        None => return Some((parse_rational(term)?, 0)),
    };
    let power = match mono {
        "x" => 1,
        _ => mono.strip_prefix("x^")?.parse().ok()?,
    };
    Some((coeff, power))
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order == other.ctx.order && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{k}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        write!(f, "({})", terms.join(" + "))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field context mismatch")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect("field context mismatch")
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field context mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// `-2cos(π/m)` in the given context; `None` encodes `m = ∞` (value `-2`).
pub fn coxeter_value(m: Option<u32>, ctx: &Arc<FieldContext>) -> Result<FieldElement> {
    let Some(m) = m else {
        return Ok(FieldElement::from_int(ctx, -2));
    };
    if m == 1 {
        return Ok(FieldElement::from_int(ctx, 2));
    }
    if m < 2 || ctx.order % m as u64 != 0 {
        return Err(Error::LabelNotDividing {
            label: m,
            order: ctx.order,
        });
    }
    // 2cos(kπ/L) = D_k(2cos(π/L)) with D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}.
    let k = (ctx.order / m as u64) as usize;
    let poly = dickson(k)
        .into_iter()
        .map(|c| BigRational::from_integer(-c))
        .collect();
    Ok(FieldElement::from_poly(ctx, poly))
}

/// Integer polynomial `D_k` with `z^k + z^{-k} = D_k(z + z^{-1})`.
fn dickson(k: usize) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Cyclotomic polynomial `Φ_n` by exact division of `z^n - 1`.
fn cyclotomic(n: u64) -> Vec<BigInt> {
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(divisors.len());
    for (i, &d) in divisors.iter().enumerate() {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for (j, &e) in divisors[..i].iter().enumerate() {
            if d % e == 0 {
                num = int_poly_div_exact(&num, &table[j]);
            }
        }
        table.push(num);
    }
    table.pop().expect("n >= 1")
}

fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let q = &rem[i + dd] / lead;
        for (j, c) in den.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
        quot[i] = q;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Minimal polynomial of `2cos(π/L)`, from `Φ_{2L}` via `x = z + z^{-1}`.
fn minimal_polynomial(order: u64) -> Vec<BigInt> {
    if order == 1 {
        // 2cos(π) = -2
        return vec![BigInt::from(2), BigInt::one()];
    }
    let phi = cyclotomic(2 * order);
    let half = (phi.len() - 1) / 2;
    let mut psi = vec![phi[half].clone()];
    for j in 1..=half {
        let d = dickson(j);
        if psi.len() < d.len() {
            psi.resize(d.len(), BigInt::zero());
        }
        for (i, c) in d.iter().enumerate() {
            psi[i] += &phi[half + j] * c;
        }
    }
    while psi.len() > 1 && psi.last().is_some_and(Zero::is_zero) {
        psi.pop();
    }
    psi
}

fn isolate_generator(order: u64, psi: &[BigRational]) -> (BigRational, BigRational) {
    if psi.len() == 2 {
        let root = -&psi[0] / &psi[1];
        return (root.clone(), root);
    }
    let theta = 2.0 * (std::f64::consts::PI / order as f64).cos();
    let next = 2.0 * (3.0 * std::f64::consts::PI / order as f64).cos();
    let mut eps = ((theta - next) / 4.0).max(1e-12);
    let sturm = sturm_sequence(psi);
    for _ in 0..64 {
        let lo = BigRational::from_float(theta - eps).expect("finite");
        let hi = BigRational::from_float(theta + eps).expect("finite");
        let changes = sign_changes(&sturm, &lo) as i64 - sign_changes(&sturm, &hi) as i64;
        let (plo, phi) = (eval(psi, &lo), eval(psi, &hi));
        if changes == 1 && !plo.is_zero() && !phi.is_zero() && plo.is_positive() != phi.is_positive() {
            return (lo, hi);
        }
        eps /= 2.0;
    }
    panic!("failed to isolate 2cos(pi/{order})");
}

fn sturm_sequence(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let deriv: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect();
    let mut seq = vec![p.to_vec(), trim(deriv)];
    loop {
        let n = seq.len();
        let (_, r) = poly_divrem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn sign_changes(seq: &[Vec<BigRational>], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Bounds of `p` over `[lo, hi]` by interval Horner evaluation.
fn eval_interval(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc_lo = BigRational::zero();
    let mut acc_hi = BigRational::zero();
    for c in p.iter().rev() {
        let products = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mn = products.iter().min().expect("nonempty").clone();
        let mx = products.iter().max().expect("nonempty").clone();
        acc_lo = mn + c;
        acc_hi = mx + c;
    }
    (acc_lo, acc_hi)
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Remainder of `p` modulo the monic `psi`, padded to `deg(psi)` coefficients.
fn reduce(mut p: Vec<BigRational>, psi: &[BigRational]) -> Vec<BigRational> {
    let d = psi.len() - 1;
    for top in (d..p.len()).rev() {
        let lead = std::mem::take(&mut p[top]);
        if lead.is_zero() {
            continue;
        }
        for (j, c) in psi[..d].iter().enumerate() {
            p[top - d + j] -= &lead * c;
        }
    }
    p.resize(d.max(1), BigRational::zero());
    p.truncate(d.max(1));
    p
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().expect("nonzero divisor").clone();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let q = rem.last().expect("nonempty") / &lead;
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &q * c;
        }
        quot[shift] = q;
        rem = trim(rem);
    }
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

/// Returns `(g, u)` with `u*a ≡ g (mod m)`, `g = gcd(a, m)`.
fn poly_gcdext(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(m.to_vec()));
    let (mut u0, mut u1) = (vec![BigRational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let u2 = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u2);
    }
    (r0, u0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[i64]) -> Vec<BigInt> {
        p.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn contexts_from_labels() {
        let c = FieldContext::for_labels([4]);
        assert_eq!(c.order(), 4);
        assert_eq!(c.minpoly(), ints(&[-2, 0, 1]).as_slice());

        let c = FieldContext::for_labels([2, 3]);
        assert_eq!(c.order(), 6);
        assert_eq!(c.minpoly(), ints(&[-3, 0, 1]).as_slice());

        let c = FieldContext::for_labels([5]);
        assert_eq!(c.minpoly(), ints(&[-1, -1, 1]).as_slice());

        let c = FieldContext::for_labels([]);
        assert_eq!(c.order(), 1);
        assert_eq!(c.degree(), 1);
    }

    #[test]
    fn minimal_polynomials_vanish_numerically() {
        for order in 1..=30u64 {
            let ctx = FieldContext::with_order(order);
            let theta = ctx.theta_f64();
            let v: f64 = ctx
                .minpoly()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * theta + c.to_f64().unwrap());
            assert!(v.abs() < 1e-6, "L={order}: {v}");
            let (lo, hi) = ctx.bracket();
            assert!(lo.to_f64().unwrap() <= theta + 1e-12 && theta - 1e-12 <= hi.to_f64().unwrap());
        }
    }

    #[test]
    fn degree_matches_totient() {
        // deg Ψ = φ(2L)/2 for L >= 2
        fn phi(n: u64) -> u64 {
            (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
        }
        for order in 2..=24u64 {
            let ctx = FieldContext::with_order(order);
            assert_eq!(ctx.degree() as u64, phi(2 * order) / 2, "L={order}");
        }
    }

    #[test]
    fn coxeter_values() {
        let ctx = FieldContext::for_labels([2, 3]);
        assert!(coxeter_value(Some(2), &ctx).unwrap().is_zero());
        assert_eq!(coxeter_value(Some(3), &ctx).unwrap(), FieldElement::from_int(&ctx, -1));
        assert_eq!(coxeter_value(None, &ctx).unwrap(), FieldElement::from_int(&ctx, -2));
        assert!(matches!(
            coxeter_value(Some(5), &ctx),
            Err(Error::LabelNotDividing { label: 5, order: 6 })
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let ctx = FieldContext::for_labels([4]);
        let x = FieldElement::theta(&ctx);
        let one = FieldElement::one(&ctx);
        assert_eq!(&x * &x, FieldElement::from_int(&ctx, 2));
        assert!((&x + &(-&x)).is_zero());
        assert_eq!((&x - &one) * (&x + &one), one);
        assert_eq!(arith(ArithOp::Inv, &x, None).unwrap() * x.clone(), one);
        assert_eq!(
            arith(ArithOp::Inv, &FieldElement::zero(&ctx), None),
            Err(Error::DivisionByZero)
        );
        let other = FieldElement::one(&FieldContext::for_labels([5]));
        assert!(matches!(x.checked_add(&other), Err(Error::ContextMismatch(4, 5))));
    }

    #[test]
    fn signs() {
        let ctx = FieldContext::for_labels([4]);
        assert_eq!(FieldElement::zero(&ctx).sign(), Sign::Zero);
        let x = FieldElement::theta(&ctx);
        assert_eq!((&x - &FieldElement::one(&ctx)).sign(), Sign::Positive);
        // √2 - 99/70 > 0 but √2 - 1414214/1000000 < 0: needs bracket refinement.
        let q = |n: i64, d: i64| FieldElement::from_rational(&ctx, BigRational::new(n.into(), d.into()));
        assert_eq!((&x - &q(140, 99)).sign(), Sign::Positive);
        assert_eq!((&x - &q(99, 70)).sign(), Sign::Negative);
        assert_eq!((&x - &q(1414214, 1000000)).sign(), Sign::Negative);

        let ctx5 = FieldContext::for_labels([5]);
        assert_eq!(coxeter_value(Some(5), &ctx5).unwrap().sign(), Sign::Negative);
    }

    #[test]
    fn coxeter_values_in_range_and_injective() {
        let labels = [2u32, 3, 4, 5, 6, 8, 10, 12];
        let ctx = FieldContext::for_labels(labels);
        let two = FieldElement::from_int(&ctx, 2);
        let mut seen = Vec::new();
        for m in labels {
            let v = coxeter_value(Some(m), &ctx).unwrap();
            let expected = if m == 2 { Sign::Zero } else { Sign::Negative };
            assert_eq!(v.sign(), expected, "m={m}");
            assert_eq!((&v + &two).sign(), Sign::Positive, "m={m}");
            let approx = -2.0 * (std::f64::consts::PI / m as f64).cos();
            // f64 evaluation of a degree-32 residue loses digits to cancellation
            assert!((v.to_f64() - approx).abs() < 1e-4, "m={m}");
            assert!(!seen.contains(&v));
            seen.push(v);
        }
    }

    #[test]
    fn render_and_parse() {
        let ctx = FieldContext::for_labels([4]);
        let x = FieldElement::theta(&ctx);
        let e = &x.scale(&BigRational::new((-1).into(), 2.into())) + &FieldElement::from_int(&ctx, 3);
        assert_eq!(e.to_string(), "(3 + -1/2*x)");
        assert_eq!(FieldElement::parse(&ctx, "(3 + -1/2*x)").unwrap(), e);
        assert_eq!(FieldElement::parse(&ctx, "3 - 1/2*x").unwrap(), e);
        assert_eq!(FieldElement::parse(&ctx, "x^2").unwrap(), FieldElement::from_int(&ctx, 2));
        assert_eq!(FieldElement::parse(&ctx, "-x").unwrap(), -&x);
        assert_eq!(FieldElement::zero(&ctx).to_string(), "(0)");
        assert!(FieldElement::parse(&ctx, "(3 + y)").is_err());
    }
}
