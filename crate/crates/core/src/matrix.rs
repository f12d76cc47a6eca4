//! 2×2 matrices over exact rings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{parse, Coeff, LaurentPoly, Ring};

/// Ring operations a matrix entry needs. Operations are fallible because
/// Laurent polynomials carry a ring signature.
pub trait Entry: Clone + PartialEq + fmt::Display {
    fn add_e(&self, other: &Self) -> Result<Self>;
    fn sub_e(&self, other: &Self) -> Result<Self>;
    fn mul_e(&self, other: &Self) -> Result<Self>;
    fn neg_e(&self) -> Self;
    fn is_zero_e(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl<C: Coeff> Entry for LaurentPoly<C> {
    fn add_e(&self, other: &Self) -> Result<Self> {
        self.try_add(other)
    }
    fn sub_e(&self, other: &Self) -> Result<Self> {
        self.try_sub(other)
    }
    fn mul_e(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }
    fn neg_e(&self) -> Self {
        -self
    }
    fn is_zero_e(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.ring())
    }
}

/// `[[a, b], [c, d]]`. Matrices act on coordinate columns, so the first
/// column is the image of the first basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Entry> Matrix2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn identity_like(x: &T) -> Self {
        Matrix2::new(x.one_like(), x.zero_like(), x.zero_like(), x.one_like())
    }

    pub fn diag(x: T, y: T) -> Self {
        let z = x.zero_like();
        Matrix2::new(x, z.clone(), z, y)
    }

    pub fn entries(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map<U, F: Fn(&T) -> Result<U>>(&self, f: F) -> Result<Matrix2<U>> {
        Ok(Matrix2 { a: f(&self.a)?, b: f(&self.b)?, c: f(&self.c)?, d: f(&self.d)? })
    }

    pub fn det(&self) -> Result<T> {
        self.a.mul_e(&self.d)?.sub_e(&self.b.mul_e(&self.c)?)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix2::identity_like(&self.a)
    }

    pub fn try_mul(&self, o: &Matrix2<T>) -> Result<Matrix2<T>> {
        let dot = |x: &T, y: &T, z: &T, w: &T| -> Result<T> { x.mul_e(y)?.add_e(&z.mul_e(w)?) };
        Ok(Matrix2 {
            a: dot(&self.a, &o.a, &self.b, &o.c)?,
            b: dot(&self.a, &o.b, &self.b, &o.d)?,
            c: dot(&self.c, &o.a, &self.d, &o.c)?,
            d: dot(&self.c, &o.b, &self.d, &o.d)?,
        })
    }

    /// `[[d, -b], [-c, a]]`, the inverse when the determinant is 1.
    pub fn adjugate(&self) -> Matrix2<T> {
        Matrix2 { a: self.d.clone(), b: self.b.neg_e(), c: self.c.neg_e(), d: self.a.clone() }
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular(&self) -> Result<Matrix2<T>> {
        let det = self.det()?;
        if det != det.one_like() {
            return Err(Error::NotUnimodular);
        }
        Ok(self.adjugate())
    }

    /// Product of a nonempty sequence, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a Matrix2<T>>>(ms: I) -> Result<Matrix2<T>>
    where
        T: 'a,
    {
        let mut it = ms.into_iter();
        let first = it.next().ok_or_else(|| Error::InvalidParameter("empty matrix product".into()))?;
        it.try_fold(first.clone(), |acc, m| acc.try_mul(m))
    }
}

impl<C: Coeff> Matrix2<LaurentPoly<C>> {
    /// Parses `[[a, b], [c, d]]` with polynomial entries.
    pub fn parse_literal(text: &str, ring: Ring) -> Result<Self> {
        let entries = split_literal(text)?;
        let mut polys = Vec::with_capacity(4);
        for (offset, s) in entries {
            let p = parse(s, ring).map_err(|e| match e {
                Error::Parse(pe) => Error::Parse(shift_parse_error(pe, offset)),
                other => other,
            })?;
            polys.push(p);
        }
        let mut it = polys.into_iter();
        let (a, b, c, d) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        Ok(Matrix2::new(a, b, c, d))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { a: self.a.to_string(), b: self.b.to_string(), c: self.c.to_string(), d: self.d.to_string() }
    }

    pub fn from_json(json: &MatrixJson, ring: Ring) -> Result<Self> {
        Ok(Matrix2::new(parse(&json.a, ring)?, parse(&json.b, ring)?, parse(&json.c, ring)?, parse(&json.d, ring)?))
    }

    pub fn to_rational(&self) -> Matrix2<crate::laurent::QPoly> {
        Matrix2 { a: self.a.to_rational(), b: self.b.to_rational(), c: self.c.to_rational(), d: self.d.to_rational() }
    }
}

fn shift_parse_error(e: crate::error::ParseError, offset: usize) -> crate::error::ParseError {
    use crate::error::ParseError::*;
    match e {
        Syntax { pos, msg } => Syntax { pos: pos + offset, msg },
        UnknownVariable { name, pos, ring } => UnknownVariable { name, pos: pos + offset, ring },
    }
}

/// Splits `[[a, b], [c, d]]` into its four entry texts with byte offsets.
fn split_literal(text: &str) -> Result<Vec<(usize, &str)>> {
    let syntax = |pos: usize, msg: &str| -> Error {
        crate::error::ParseError::Syntax { pos, msg: msg.to_string() }.into()
    };
    let mut depth = 0usize;
    let mut paren = 0usize;
    let mut rows: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut start = 0usize;
    let mut closed_outer = false;
    for (i, ch) in text.char_indices() {
        if closed_outer && !ch.is_whitespace() {
            return Err(syntax(i, "trailing input after matrix"));
        }
        match ch {
            '[' => {
                depth += 1;
                match depth {
                    1 => {}
                    2 => {
                        rows.push(Vec::new());
                        start = i + 1;
                    }
                    _ => return Err(syntax(i, "matrix nesting too deep")),
                }
            }
            ']' => {
                match depth {
                    2 => rows.last_mut().unwrap().push((start, &text[start..i])),
                    1 => closed_outer = true,
                    _ => return Err(syntax(i, "unbalanced `]`")),
                }
                depth -= 1;
            }
            '(' => paren += 1,
            ')' => paren = paren.saturating_sub(1),
            ',' if depth == 2 && paren == 0 => {
                rows.last_mut().unwrap().push((start, &text[start..i]));
                start = i + 1;
            }
            ',' if depth == 1 => {}
            c if depth == 0 && !c.is_whitespace() => return Err(syntax(i, "expected `[`")),
            _ => {}
        }
    }
    if !closed_outer {
        return Err(syntax(text.len(), "unterminated matrix"));
    }
    if rows.len() != 2 || rows.iter().any(|r| r.len() != 2) {
        return Err(syntax(0, "expected a 2x2 matrix [[a, b], [c, d]]"));
    }
    Ok(rows.into_iter().flatten().collect())
}

impl<T: fmt::Display> fmt::Display for Matrix2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// File form of a matrix: each entry is polynomial text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ZPoly;

    fn m(s: &str) -> Matrix2<ZPoly> {
        Matrix2::parse_literal(s, Ring::Univariate).unwrap()
    }

    #[test]
    fn literal_parsing() {
        let x = m("[[t, 0], [0, t^-1]]");
        assert_eq!(x.a, ZPoly::t_pow(1));
        assert_eq!(x.d, ZPoly::t_pow(-1));
        assert_eq!(m(" [ [ (t-1)*(t+1) , 1 ] , [0,1] ] ").a.to_string(), "-1 + t^2");
        for bad in ["[[1,0],[0]]", "[[1,0],[0,1]", "[[1,0],[0,1]] x", "1", "[[1,0],[0,1],[1,1]]"] {
            assert!(Matrix2::<ZPoly>::parse_literal(bad, Ring::Univariate).is_err(), "{bad}");
        }
        match Matrix2::<ZPoly>::parse_literal("[[1, 0], [0, q]]", Ring::Univariate) {
            Err(Error::Parse(p)) => assert_eq!(p.position(), 13),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn products_and_inverses() {
        let x = m("[[1, t], [0, 1]]");
        let y = m("[[1, 0], [t^-1, 1]]");
        let xy = x.try_mul(&y).unwrap();
        assert_eq!(xy.det().unwrap(), ZPoly::one(Ring::Univariate));
        assert!(xy.try_mul(&xy.inverse_unimodular().unwrap()).unwrap().is_identity());
        assert_eq!(m("[[2, 0], [0, 1]]").inverse_unimodular(), Err(Error::NotUnimodular));
        assert!(Matrix2::<ZPoly>::product([]).is_err());
        assert_eq!(Matrix2::product([&x, &y, &x]).unwrap(), xy.try_mul(&x).unwrap());
    }

    #[test]
    fn json_form() {
        let x = m("[[1, t - 2 + t^-1], [0, 1]]");
        let j = x.to_json();
        assert_eq!(j.b, "-2 + t + t^-1");
        assert_eq!(Matrix2::from_json(&j, Ring::Univariate).unwrap(), x);
    }
}
