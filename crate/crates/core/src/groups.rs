//! Finite groups as multiplication tables, with built-in generators for the
//! cyclic and dihedral families and direct products. Input to the Cayley
//! graph constructor.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table must be order x order with entries below the order")]
    MalformedTable,
    #[error("identity index {0} out of range")]
    IdentityOutOfRange(usize),
    #[error("element {0} does not behave as an identity")]
    BrokenIdentity(usize),
    #[error("element {0} has no inverse")]
    MissingInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("dihedral group order must be even and at least 6")]
    BadDihedralOrder,
}

/// A finite group given by its full multiplication table.
///
/// `product[a][b]` is the element a * b. Closure holds by representation;
/// identity, inverses and associativity are verified at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    product: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(product: Vec<Vec<usize>>, identity: usize) -> Result<Self, GroupError> {
        let order = product.len();
        if order == 0
            || product
                .iter()
                .any(|row| row.len() != order || row.iter().any(|&x| x >= order))
        {
            return Err(GroupError::MalformedTable);
        }
        if identity >= order {
            return Err(GroupError::IdentityOutOfRange(identity));
        }
        for a in 0..order {
            if product[identity][a] != a || product[a][identity] != a {
                return Err(GroupError::BrokenIdentity(a));
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| product[a][b] == identity && product[b][a] == identity) {
                Some(b) => inverse[a] = b,
                None => return Err(GroupError::MissingInverse(a)),
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if product[product[a][b]][c] != product[a][product[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            product,
            identity,
            inverse,
        })
    }

    /// The additive group Z_n.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let product = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(product, 0).expect("cyclic table is a group")
    }

    /// The dihedral group of the given (even, >= 6) order.
    ///
    /// Elements 0..m are the rotations x -> x + k of the m-gon, elements
    /// m..2m the reflections x -> k - x; composition acts on the left.
    pub fn dihedral(order: usize) -> Result<Self, GroupError> {
        if order < 6 || !order.is_multiple_of(2) {
            return Err(GroupError::BadDihedralOrder);
        }
        let m = order / 2;
        let rot = |k: usize| k % m;
        let refl = |k: usize| m + k % m;
        let mut product = vec![vec![0; order]; order];
        for a in 0..order {
            for b in 0..order {
                // (g * h)(x) = g(h(x))
                product[a][b] = match (a < m, b < m) {
                    (true, true) => rot(a + b),
                    (true, false) => refl(b - m + a),
                    (false, true) => refl((a - m) + m - rot(b)),
                    (false, false) => rot((a - m) + m - (b - m)),
                };
            }
        }
        GroupTable::new(product, 0)
    }

    /// Direct product; element (a, b) is indexed a * |H| + b.
    pub fn direct_product(&self, other: &GroupTable) -> Self {
        let n = self.order * other.order;
        let idx = |a: usize, b: usize| a * other.order + b;
        let mut product = vec![vec![0; n]; n];
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        product[idx(a1, b1)][idx(a2, b2)] = idx(self.product[a1][a2], other.product[b1][b2]);
                    }
                }
            }
        }
        GroupTable::new(product, idx(self.identity, other.identity)).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn product_table(&self) -> &Vec<Vec<usize>> {
        &self.product
    }

    /// Whether the given elements generate the whole group.
    pub fn generates(&self, generators: &[usize]) -> bool {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in generators {
                let y = self.mul(s, x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.order
    }

    /// All non-identity elements, split into involutions and inverse pairs.
    pub fn involutions(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| a != self.identity && self.inv(a) == a)
            .collect()
    }
}
