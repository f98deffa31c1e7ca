//! Beam splitter checked against direct exponentiation of its generator in
//! the two-photon sector of two modes.

use approx::assert_abs_diff_eq;
use num_complex::Complex64;

use mzvis_core::fock::{LabeledMode, Path, PureState};
use mzvis_core::optics::{beam_splitter, BeamSplitterSpec};

const X: LabeledMode = LabeledMode::signal(Path::A);
const Y: LabeledMode = LabeledMode::signal(Path::B);

/// Two-photon basis |2,0⟩, |1,1⟩, |0,2⟩.
const KETS: [(u8, u8); 3] = [(2, 0), (1, 1), (0, 2)];

/// Matrix of `θ(a†_y a_x − a†_x a_y)` on the two-photon sector, from the
/// ladder rules `a|n⟩ = √n|n−1⟩`, `a†|n⟩ = √(n+1)|n+1⟩`.
fn generator(theta: f64) -> [[f64; 3]; 3] {
    let mut g = [[0.0; 3]; 3];
    for (col, &(nx, ny)) in KETS.iter().enumerate() {
        if nx > 0 {
            let amp = (nx as f64).sqrt() * (ny as f64 + 1.0).sqrt();
            let row = KETS.iter().position(|&k| k == (nx - 1, ny + 1)).unwrap();
            g[row][col] += theta * amp;
        }
        if ny > 0 {
            let amp = (ny as f64).sqrt() * (nx as f64 + 1.0).sqrt();
            let row = KETS.iter().position(|&k| k == (nx + 1, ny - 1)).unwrap();
            g[row][col] -= theta * amp;
        }
    }
    g
}

fn matmul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// Taylor series; the generator norm is at most ~2θ so 40 terms is plenty.
fn expm(g: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut out = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let mut term = out;
    for k in 1..40 {
        term = matmul(&term, g);
        for row in term.iter_mut() {
            for v in row.iter_mut() {
                *v /= k as f64;
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] += term[i][j];
            }
        }
    }
    out
}

fn check_sector(theta: f64, input: [Complex64; 3]) {
    let u = expm(&generator(theta));
    let state = PureState::from_terms([X, Y], KETS.iter().zip(input).map(|(&(a, b), amp)| (vec![a, b], amp))).unwrap();
    let spec = BeamSplitterSpec::from_angle(Path::A, Path::B, theta).unwrap();
    let out = beam_splitter(&state, &spec).unwrap();
    for (row, &(a, b)) in KETS.iter().enumerate() {
        let want: Complex64 = (0..3).map(|col| input[col] * u[row][col]).sum();
        assert_abs_diff_eq!((out.amplitude(&[a, b]) - want).norm(), 0.0, epsilon = 1e-12);
    }
}

#[test]
fn hom_input_at_balanced_splitter() {
    let theta = std::f64::consts::FRAC_PI_4;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::default();
    check_sector(theta, [zero, one, zero]);

    let u = expm(&generator(theta));
    // coincidence term vanishes; bunched terms are ±1/√2
    assert_abs_diff_eq!(u[1][1], 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(u[0][1].abs(), std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-14);
    assert_abs_diff_eq!(u[0][1] + u[2][1], 0.0, epsilon = 1e-14);
}

#[test]
fn whole_sector_over_angles() {
    let inputs = [
        [
            Complex64::new(0.3, 0.1),
            Complex64::new(-0.5, 0.2),
            Complex64::new(0.1, -0.7),
        ],
        [Complex64::new(1.0, 0.0), Complex64::default(), Complex64::default()],
        [Complex64::default(), Complex64::default(), Complex64::new(0.0, 1.0)],
    ];
    for k in 0..=12 {
        let theta = std::f64::consts::FRAC_PI_2 * k as f64 / 12.0;
        for input in inputs {
            check_sector(theta, input);
        }
    }
}
