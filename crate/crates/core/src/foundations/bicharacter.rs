use super::{Degree, Field, FoundationError, GradingGroup, Scalar};

/// A twisting `t: F ⊗_ℤ G → k^×`, given by its values on pairs of cyclic generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    left: GradingGroup,
    right: GradingGroup,
    field: Field,
    /// `values[i][j] = t(generator_i ⊗ generator_j)`.
    values: Vec<Vec<Scalar>>,
}

impl Bicharacter {
    /// Validates nonvanishing and compatibility with torsion orders.
    pub fn new(
        left: GradingGroup,
        right: GradingGroup,
        field: Field,
        values: Vec<Vec<Scalar>>,
    ) -> Result<Self, FoundationError> {
        if values.len() != left.rank() || values.iter().any(|row| row.len() != right.rank()) {
            return Err(FoundationError::BicharacterShape);
        }
        for (i, row) in values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.field() != field {
                    return Err(FoundationError::FieldMismatch);
                }
                if v.is_zero() {
                    return Err(FoundationError::ZeroTwist { left: i, right: j });
                }
                for order in [left.orders()[i], right.orders()[j]] {
                    if order != 0 && !v.pow(order as i64).is_one() {
                        return Err(FoundationError::IllDefinedTwist {
                            left: i,
                            right: j,
                            order,
                        });
                    }
                }
            }
        }
        Ok(Bicharacter {
            left,
            right,
            field,
            values,
        })
    }

    /// `t ≡ 1`.
    pub fn trivial(left: GradingGroup, right: GradingGroup, field: Field) -> Self {
        let values = vec![vec![field.one(); right.rank()]; left.rank()];
        Bicharacter {
            left,
            right,
            field,
            values,
        }
    }

    /// The twist on ℤ ⊗ ℤ with `t(1 ⊗ 1) = q`.
    pub fn on_integers(field: Field, q: Scalar) -> Result<Self, FoundationError> {
        Bicharacter::new(
            GradingGroup::integers(),
            GradingGroup::integers(),
            field,
            vec![vec![q]],
        )
    }

    pub fn left_group(&self) -> &GradingGroup {
        &self.left
    }

    pub fn right_group(&self) -> &GradingGroup {
        &self.right
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn values(&self) -> &[Vec<Scalar>] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().flatten().all(Scalar::is_one)
    }

    /// `t^{⟨f|g⟩} = ∏ t(gen_i ⊗ gen_j)^{f_i g_j}`.
    pub fn eval(&self, f: &Degree, g: &Degree) -> Result<Scalar, FoundationError> {
        self.left.check(f)?;
        self.right.check(g)?;
        Ok(self.eval_unchecked(f, g))
    }

    /// Same as [`Bicharacter::eval`] without the membership check; used in hot loops
    /// where degrees come straight from validated algebras and complexes.
    pub fn eval_unchecked(&self, f: &Degree, g: &Degree) -> Scalar {
        let mut acc = self.field.one();
        for (i, &fi) in f.0.iter().enumerate() {
            if fi == 0 {
                continue;
            }
            for (j, &gj) in g.0.iter().enumerate() {
                if gj == 0 || self.values[i][j].is_one() {
                    continue;
                }
                let e = reduced_exponent(fi * gj, self.left.orders()[i], self.right.orders()[j]);
                acc = acc * self.values[i][j].pow(e);
            }
        }
        acc
    }

    /// `t^{-⟨f|g⟩}`.
    pub fn eval_inverse(&self, f: &Degree, g: &Degree) -> Scalar {
        self.eval_unchecked(f, g)
            .inv()
            .expect("bicharacter values are units")
    }

    /// Membership in F′ = ⋂_u Ker t^{⟨−|u⟩}, checked on the generators of G.
    pub fn in_left_kernel(&self, f: &Degree) -> Result<bool, FoundationError> {
        self.left.check(f)?;
        Ok(self.left_kernel_violation(f).is_none())
    }

    /// Membership in G′ = ⋂_v Ker t^{⟨v|−⟩}, checked on the generators of F.
    pub fn in_right_kernel(&self, g: &Degree) -> Result<bool, FoundationError> {
        self.right.check(g)?;
        Ok(self.right_kernel_violation(g).is_none())
    }

    /// First generator `j` of G with `t^{⟨f|gen_j⟩} ≠ 1`, if any.
    pub fn left_kernel_violation(&self, f: &Degree) -> Option<usize> {
        (0..self.right.rank()).find(|&j| !self.eval_unchecked(f, &self.right.generator(j)).is_one())
    }

    /// First generator `i` of F with `t^{⟨gen_i|g⟩} ≠ 1`, if any.
    pub fn right_kernel_violation(&self, g: &Degree) -> Option<usize> {
        (0..self.left.rank()).find(|&i| !self.eval_unchecked(&self.left.generator(i), g).is_one())
    }
}

// The exponent only matters modulo the order of the value, which divides both
// cyclic orders when they are finite.
fn reduced_exponent(e: i64, m: u64, n: u64) -> i64 {
    let g = match (m, n) {
        (0, 0) => return e,
        (0, n) => n,
        (m, 0) => m,
        (m, n) => num_integer::gcd(m, n),
    };
    e.rem_euclid(g as i64)
}

/// `(−1)^{a·b}` as a scalar.
///
/// Every sign coming from the graded (Koszul) sign rule in the crate goes through
/// this routine, including plain parities `(−1)^k = koszul_sign(k, 1)`.
pub fn koszul_sign(field: Field, a: i64, b: i64) -> Scalar {
    if (a * b).rem_euclid(2) == 0 {
        field.one()
    } else {
        field.from_i64(-1)
    }
}

/// `(−1)^k`.
pub fn parity_sign(field: Field, k: i64) -> Scalar {
    koszul_sign(field, k, 1)
}
