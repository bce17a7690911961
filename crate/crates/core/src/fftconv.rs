use num_complex::Complex64;
use rustfft::FftPlanner;

/// Full linear convolution `(x * y)[n] = Σ x[i] y[n - i]`, length `x.len() + y.len() - 1`.
pub fn convolve(x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let out_len = x.len() + y.len() - 1;
    let size = out_len.next_power_of_two();
    let mut planner = FftPlanner::<f64>::new();
    let fwd = planner.plan_fft_forward(size);
    let inv = planner.plan_fft_inverse(size);

    let zero = Complex64::new(0.0, 0.0);
    let mut xa = vec![zero; size];
    xa[..x.len()].copy_from_slice(x);
    let mut ya = vec![zero; size];
    ya[..y.len()].copy_from_slice(y);
    fwd.process(&mut xa);
    fwd.process(&mut ya);
    let scale = 1.0 / size as f64;
    for (p, q) in xa.iter_mut().zip(&ya) {
        *p = *p * q * scale;
    }
    inv.process(&mut xa);
    xa.truncate(out_len);
    xa
}
