//! Raw catalog tables, kept as text and parsed on load.

pub(super) struct RawOracle {
    pub group_names: [&'static str; 4],
    /// Chart coordinates as functions of group coordinates.
    pub chart_map: [&'static str; 4],
    /// Group coordinates as functions of chart coordinates.
    pub inverse_map: [&'static str; 4],
    /// `ω⁺` in group coordinates as `(i, j, coefficient of dg_i∧dg_j)`.
    pub group_form: &'static [(usize, usize, &'static str)],
    pub right_fields: [[&'static str; 4]; 4],
    pub left_fields: Option<[[&'static str; 4]; 4]>,
    pub note: &'static str,
}

pub(super) struct RawTables {
    pub p: [[&'static str; 4]; 4],
    pub s: [[&'static str; 4]; 4],
    pub poisson: &'static str,
    pub symplectic: &'static str,
}

pub(super) struct RawEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub dim: usize,
    /// `(a, b, k, c)`: `[e_a, e_b]` has `e_k`-coefficient `c` (1-based).
    pub brackets: &'static [(usize, usize, usize, i64)],
    /// `(a, b, c)`: `ω(e_a, e_b) = c` (1-based).
    pub omega: &'static [(usize, usize, i64)],
    pub chart_names: &'static [&'static str],
    pub golden: Option<RawTables>,
    pub printed: Option<RawTables>,
    pub oracle: Option<RawOracle>,
    pub unimodular: bool,
    pub nilindex: Option<usize>,
    pub solvable: bool,
    pub lattice_notes: &'static str,
}

const XYZT: &[&str] = &["X", "Y", "Z", "T"];

pub(super) const ENTRIES: &[RawEntry] = &[
    RawEntry {
        id: "g1",
        title: "filiform nilpotent group, [e4,e1] = e2, [e4,e2] = e3",
        dim: 4,
        brackets: &[(4, 1, 2, 1), (4, 2, 3, 1)],
        omega: &[(4, 3, 1), (1, 2, 1)],
        chart_names: XYZT,
        golden: Some(RawTables {
            p: [
                ["0", "1", "0", "-Y"],
                ["-1", "0", "0", "-Z"],
                ["0", "0", "0", "-1"],
                ["Y", "Z", "1", "0"],
            ],
            s: [
                ["0", "-1", "Z", "0"],
                ["1", "0", "-Y", "0"],
                ["-Z", "Y", "0", "1"],
                ["0", "0", "-1", "0"],
            ],
            poisson: "∂X^∂Y - Y*∂X^∂T - Z*∂Y^∂T - ∂Z^∂T",
            symplectic: "-dX^dY + Z*dX^dZ - Y*dY^dZ + dZ^dT",
        }),
        printed: None,
        oracle: Some(RawOracle {
            group_names: ["x", "y", "z", "t"],
            chart_map: ["y - 1/6*t^3", "-x + 1/2*t^2", "-t", "-1/2*x^2 + 1/2*x*t^2 - y*t + z"],
            // t = -Z, x = t^2/2 - Y, y = X + t^3/6, z = T + x^2/2 - x t^2/2 + y t
            inverse_map: [
                "1/2*Z^2 - Y",
                "X - 1/6*Z^3",
                "T + 1/2*(1/2*Z^2 - Y)^2 - 1/2*(1/2*Z^2 - Y)*Z^2 - (X - 1/6*Z^3)*Z",
                "-Z",
            ],
            group_form: &[(0, 1, "1"), (0, 3, "-1/2*t^2"), (1, 3, "t"), (2, 3, "-1")],
            right_fields: [
                ["1", "0", "0", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "x", "y", "1"],
            ],
            left_fields: Some([
                ["1", "t", "1/2*t^2", "0"],
                ["0", "1", "t", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ]),
            note: "group law (x,y,z,t)(x',y',z',t') = (x+x', y+y'+t x', z+z'+t y'+t²x'/2, t+t')",
        }),
        unimodular: true,
        nilindex: Some(3),
        solvable: true,
        lattice_notes: "Γ = {(m, n, k, 2r) : m, n, k, r ∈ ℤ} is a uniform lattice; the group admits infinitely many pairwise non-isomorphic lattices.",
    },
    RawEntry {
        id: "g2",
        title: "G2' × ℝ with [e1,e2] = e2, [e1,e3] = -e3",
        dim: 4,
        brackets: &[(1, 2, 2, 1), (1, 3, 3, -1)],
        omega: &[(1, 4, 1), (2, 3, 1)],
        chart_names: XYZT,
        golden: Some(RawTables {
            p: [
                ["0", "Y", "-Z", "1"],
                ["-Y", "0", "1", "0"],
                ["Z", "-1", "0", "0"],
                ["-1", "0", "0", "0"],
            ],
            s: [
                ["0", "0", "0", "-1"],
                ["0", "0", "-1", "-Z"],
                ["0", "1", "0", "-Y"],
                ["1", "Z", "Y", "0"],
            ],
            poisson: "Y*∂X^∂Y - Z*∂X^∂Z + ∂X^∂T + ∂Y^∂Z",
            symplectic: "-dX^dT - dY^dZ - Z*dY^dT - Y*dZ^dT",
        }),
        // reference tables with a sign slip at P(1,2); S inherits it at (3,4)
        printed: Some(RawTables {
            p: [
                ["0", "-Y", "-Z", "1"],
                ["Y", "0", "1", "0"],
                ["Z", "-1", "0", "0"],
                ["-1", "0", "0", "0"],
            ],
            s: [
                ["0", "0", "0", "-1"],
                ["0", "0", "-1", "-Z"],
                ["0", "1", "0", "Y"],
                ["1", "Z", "-Y", "0"],
            ],
            poisson: "-Y*∂X^∂Y - Z*∂X^∂Z + ∂X^∂T + ∂Y^∂Z",
            symplectic: "-dX^dT - dY^dZ - Z*dY^dT + Y*dZ^dT",
        }),
        oracle: Some(RawOracle {
            group_names: ["x", "y", "z", "t"],
            chart_map: ["t + y*z", "z", "-y", "-x"],
            inverse_map: ["-T", "-Z", "Y", "X + Y*Z"],
            group_form: &[(0, 3, "1"), (1, 2, "1")],
            right_fields: [
                ["1", "y", "-z", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ],
            left_fields: None,
            note: "group law (x,y,z,t)(x',y',z',t') = (x+x', y+eˣy', z+e⁻ˣz', t+t'); left fields involve e^{±x}",
        }),
        unimodular: true,
        nilindex: None,
        solvable: true,
        lattice_notes: "G2 = G2' × ℝ, so a lattice Γ1 of G2' gives the lattice Γ1 × ℤ. Lattices of G2' are semidirect products ℤ ⋉ ℤ² where 1 acts on Γ1 ∩ N (N the nilradical) by [[0, -1], [1, n]] with n ≥ 3 in a suitable basis.",
    },
    RawEntry {
        id: "g3",
        title: "universal cover of the Euclidean motions × ℝ, [e1,e2] = e3, [e1,e3] = -e2",
        dim: 4,
        brackets: &[(1, 2, 3, 1), (1, 3, 2, -1)],
        omega: &[(1, 4, 1), (2, 3, 1)],
        chart_names: XYZT,
        golden: Some(RawTables {
            p: [
                ["0", "Z", "-Y", "1"],
                ["-Z", "0", "1", "0"],
                ["Y", "-1", "0", "0"],
                ["-1", "0", "0", "0"],
            ],
            s: [
                ["0", "0", "0", "-1"],
                ["0", "0", "-1", "-Y"],
                ["0", "1", "0", "-Z"],
                ["1", "Y", "Z", "0"],
            ],
            poisson: "Z*∂X^∂Y - Y*∂X^∂Z + ∂X^∂T + ∂Y^∂Z",
            symplectic: "-dX^dT - dY^dZ - Y*dY^dT - Z*dZ^dT",
        }),
        printed: None,
        oracle: Some(RawOracle {
            group_names: ["x", "y", "z", "t"],
            // i_{e1⁻} ω⁺ = d(t - (y² + z²)/2)
            chart_map: ["t - 1/2*y^2 - 1/2*z^2", "z", "-y", "-x"],
            inverse_map: ["-T", "-Z", "Y", "X + 1/2*Y^2 + 1/2*Z^2"],
            group_form: &[(0, 3, "1"), (1, 2, "1")],
            right_fields: [
                ["1", "-z", "y", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ],
            left_fields: None,
            note: "group law (x,y,z,t)(x',y',z',t') = (x+x', y+y' cos x - z' sin x, z+y' sin x + z' cos x, t+t'); left fields are trigonometric",
        }),
        unimodular: true,
        nilindex: None,
        solvable: true,
        lattice_notes: "G3 = G3' × ℝ with G3' the universal cover of the positive motions of the Euclidean plane. The element 1 ∈ ℝ and ℤ² generate a lattice isomorphic to ℤ³; using 1/2 instead of 1 gives a non-nilpotent lattice containing it with index 2.",
    },
    RawEntry {
        id: "g4",
        title: "Heisenberg group × ℝ, [e1,e2] = e3",
        dim: 4,
        brackets: &[(1, 2, 3, 1)],
        omega: &[(1, 4, 1), (2, 3, 1)],
        chart_names: XYZT,
        golden: Some(RawTables {
            p: [
                ["0", "Z", "0", "1"],
                ["-Z", "0", "1", "0"],
                ["0", "-1", "0", "0"],
                ["-1", "0", "0", "0"],
            ],
            s: [
                ["0", "0", "0", "-1"],
                ["0", "0", "-1", "0"],
                ["0", "1", "0", "-Z"],
                ["1", "0", "Z", "0"],
            ],
            poisson: "Z*∂X^∂Y + ∂X^∂T + ∂Y^∂Z",
            symplectic: "-dX^dT - dY^dZ - Z*dZ^dT",
        }),
        printed: None,
        oracle: Some(RawOracle {
            group_names: ["x", "y", "z", "s"],
            chart_map: ["s - 1/2*y^2", "z", "-y", "-x"],
            inverse_map: ["-T", "-Z", "Y", "X + 1/2*Z^2"],
            group_form: &[(0, 3, "1"), (1, 2, "1")],
            right_fields: [
                ["1", "0", "y", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ],
            left_fields: Some([
                ["1", "0", "0", "0"],
                ["0", "1", "x", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ]),
            note: "group law (x,y,z,t)(x',y',z',t') = (x+x', y+y', z+z'+x y', t t') with t > 0; oracle coordinate s = ln t, so t∂t = ∂s and dt/t = ds",
        }),
        unimodular: true,
        nilindex: Some(2),
        solvable: true,
        lattice_notes: "G4 = N3 × ℝ with N3 the Heisenberg group of unipotent upper triangular 3×3 matrices. For integers p, q, r with pqr ≠ 0, Γ_{p,q,r} = {[[1, m/p, k/(pqr)], [0, 1, n/q], [0, 0, 1]] : m, n, k ∈ ℤ} is a lattice in N3, commensurable with Γ_{1,1,1}, which it contains with index p²q²r.",
    },
    RawEntry {
        id: "aff2",
        title: "affine group of the line, [e1,e2] = e2 (non-unimodular)",
        dim: 2,
        brackets: &[(1, 2, 2, 1)],
        omega: &[(1, 2, 1)],
        chart_names: &["x1", "x2"],
        golden: None,
        printed: None,
        oracle: None,
        unimodular: false,
        nilindex: None,
        solvable: true,
        lattice_notes: "Not unimodular, hence admits no lattice.",
    },
];
