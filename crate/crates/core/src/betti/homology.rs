use std::collections::HashMap;

use crate::betti::complex::DivisorComplex;
use crate::betti::rank::{rank, SparseColumn};
use crate::field::FieldSpec;

/// `dim H̃_i(Δ; k)` for `i = 0..=i_max`.
///
/// The void complex has no homology at all. For the irrelevant complex `{∅}`
/// all entries are zero too (its only reduced homology sits in degree −1).
pub fn reduced_homology_dims(complex: &DivisorComplex, field: FieldSpec, i_max: usize) -> Vec<usize> {
    homology_upto(complex, field, i_max, u128::MAX).expect("no face cap")
}

/// Like [`reduced_homology_dims`] but refuses complexes whose predicted face
/// count up to dimension `i_max + 1` exceeds `face_cap`; the prediction is
/// returned as the error.
pub fn reduced_homology_dims_capped(
    complex: &DivisorComplex,
    field: FieldSpec,
    i_max: usize,
    face_cap: u128,
) -> Result<Vec<usize>, u128> {
    homology_upto(complex, field, i_max, face_cap)
}

fn homology_upto(complex: &DivisorComplex, field: FieldSpec, i_max: usize, cap: u128) -> Result<Vec<usize>, u128> {
    let mut dims = vec![0usize; i_max + 1];
    let top_dim = match complex.dimension() {
        None | Some(-1) => return Ok(dims),
        Some(d) => d as usize,
    };
    if complex.is_cone() {
        return Ok(dims);
    }
    let top = top_dim.min(i_max + 1);
    let predicted = complex.predicted_face_count(top);
    if predicted > cap {
        return Err(predicted);
    }
    let faces: Vec<Vec<u128>> = (0..=top).map(|d| complex.face_masks(d)).collect();
    // ranks[d] = rank of ∂_d : C_d → C_{d-1}; ∂_0 is the augmentation
    let mut ranks = vec![0usize; top + 2];
    ranks[0] = usize::from(!faces[0].is_empty());
    for d in 1..=top {
        ranks[d] = rank(&boundary_columns(&faces[d], &faces[d - 1]), field);
    }
    for (i, dim) in dims.iter_mut().enumerate() {
        if i > top_dim {
            break;
        }
        *dim = faces[i].len() - ranks[i] - ranks[i + 1];
    }
    Ok(dims)
}

/// Columns of the simplicial boundary map from `faces` to `lower`, both
/// sorted mask lists. The sign of removing the `k`-th smallest vertex is
/// `(−1)^k`.
fn boundary_columns(faces: &[u128], lower: &[u128]) -> Vec<SparseColumn> {
    let index: HashMap<u128, u32> = lower.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
    faces
        .iter()
        .map(|&face| {
            let mut col: SparseColumn = Vec::new();
            let mut rest = face;
            let mut k = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                col.push((index[&(face ^ bit)], sign));
                rest ^= bit;
                k += 1;
            }
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::complex::divisor_complex;
    use crate::betti::multidegree::Multidegree;
    use crate::catalog;

    fn fields() -> [FieldSpec; 4] {
        [FieldSpec::RATIONALS, FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)]
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let c = DivisorComplex::from_facets(vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        for f in fields() {
            assert_eq!(reduced_homology_dims(&c, f, 3), vec![0, 1, 0, 0]);
        }
    }

    #[test]
    fn full_simplex_is_acyclic() {
        let c = DivisorComplex::from_facets(vec![vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(reduced_homology_dims(&c, FieldSpec::RATIONALS, 5), vec![0; 6]);
    }

    #[test]
    fn two_points_and_hollow_tetrahedron() {
        let c = DivisorComplex::from_facets(vec![vec![0], vec![1]]).unwrap();
        assert_eq!(reduced_homology_dims(&c, FieldSpec::RATIONALS, 1), vec![1, 0]);
        let sphere = DivisorComplex::from_facets(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(reduced_homology_dims(&sphere, FieldSpec::prime(2), 2), vec![0, 0, 1]);
        assert_eq!(reduced_homology_dims(&DivisorComplex::void(), FieldSpec::RATIONALS, 2), vec![0, 0, 0]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let facets = vec![
            vec![0, 1, 3], vec![0, 1, 5], vec![0, 2, 3], vec![0, 2, 4], vec![0, 4, 5],
            vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 4], vec![2, 3, 5], vec![3, 4, 5],
        ];
        let c = DivisorComplex::from_facets(facets).unwrap();
        assert_eq!(reduced_homology_dims(&c, FieldSpec::RATIONALS, 2), vec![0, 0, 0]);
        assert_eq!(reduced_homology_dims(&c, FieldSpec::prime(3), 2), vec![0, 0, 0]);
        assert_eq!(reduced_homology_dims(&c, FieldSpec::prime(2), 2), vec![0, 1, 1]);
    }

    #[test]
    fn two_squares_complex_is_a_circle_over_every_field() {
        let h2 = catalog::obstruction(2);
        let c = divisor_complex(h2, &Multidegree(vec![1; 8])).unwrap();
        for f in fields() {
            let dims = reduced_homology_dims(&c, f, 3);
            assert_eq!(&dims[..2], &[0, 1]);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let c = DivisorComplex::from_facets(vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 4]]).unwrap();
        assert!(reduced_homology_dims_capped(&c, FieldSpec::RATIONALS, 1, 3).is_err());
        assert!(reduced_homology_dims_capped(&c, FieldSpec::RATIONALS, 1, 1000).is_ok());
    }
}
