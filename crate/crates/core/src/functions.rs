//! Analytic signals used by the figure runs, the examples and the tests.

/// One-dimensional test signal on `[0, 1]` with its analytic derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TestFunction {
    /// `exp(-(t/sigma)^2 / 2)`.
    Gauss { sigma: f64 },
    /// Sum of two Gaussian bumps.
    TwoGauss {
        a1: f64,
        a2: f64,
        sigma1: f64,
        sigma2: f64,
        t1: f64,
        t2: f64,
    },
    /// `A exp(-((t - center)/width)^power)` with an even `power`.
    FlatTop {
        amplitude: f64,
        width: f64,
        power: u32,
        center: f64,
    },
    /// `exp(-4t) + exp(-((t - 1/2)/sigma)^2 / 2) / 2`.
    ExpPlusGauss { sigma: f64 },
}

impl TestFunction {
    pub fn gauss(sigma: f64) -> Self {
        Self::Gauss { sigma }
    }

    pub fn two_gauss(a1: f64, a2: f64, sigma1: f64, sigma2: f64, t1: f64, t2: f64) -> Self {
        Self::TwoGauss {
            a1,
            a2,
            sigma1,
            sigma2,
            t1,
            t2,
        }
    }

    pub fn flat_top(amplitude: f64, width: f64, power: u32) -> Self {
        Self::FlatTop {
            amplitude,
            width,
            power,
            center: 0.5,
        }
    }

    pub fn exp_plus_gauss(sigma: f64) -> Self {
        Self::ExpPlusGauss { sigma }
    }

    /// Narrow two-Gaussian signal used for the basic approximation plots.
    pub fn figure1() -> Self {
        Self::two_gauss(2.0, 1.5, 0.05, 0.05, 0.42, 0.56)
    }

    /// Steep flat-top bump that makes the DFT extension oscillate.
    pub fn figure2() -> Self {
        Self::flat_top(2.0, 0.15, 6)
    }

    /// Two Gaussians of unequal width for the truncated-DFT comparison.
    pub fn figure3() -> Self {
        Self::two_gauss(2.0, 1.5, 0.07, 0.2, 0.42, 0.56)
    }

    /// Non-periodic signal used for the derivative comparison.
    pub fn figure4() -> Self {
        Self::exp_plus_gauss(0.07)
    }

    pub fn value(&self, t: f64) -> f64 {
        match *self {
            Self::Gauss { sigma } => bump(t, 0.0, sigma),
            Self::TwoGauss {
                a1,
                a2,
                sigma1,
                sigma2,
                t1,
                t2,
            } => a1 * bump(t, t1, sigma1) + a2 * bump(t, t2, sigma2),
            Self::FlatTop {
                amplitude,
                width,
                power,
                center,
            } => amplitude * (-((t - center) / width).powi(power as i32)).exp(),
            Self::ExpPlusGauss { sigma } => (-4.0 * t).exp() + 0.5 * bump(t, 0.5, sigma),
        }
    }

    pub fn derivative(&self, t: f64) -> f64 {
        match *self {
            Self::Gauss { sigma } => bump_derivative(t, 0.0, sigma),
            Self::TwoGauss {
                a1,
                a2,
                sigma1,
                sigma2,
                t1,
                t2,
            } => a1 * bump_derivative(t, t1, sigma1) + a2 * bump_derivative(t, t2, sigma2),
            Self::FlatTop {
                amplitude,
                width,
                power,
                center,
            } => {
                let x = (t - center) / width;
                let p = power as i32;
                -amplitude * f64::from(power) / width * x.powi(p - 1) * (-x.powi(p)).exp()
            }
            Self::ExpPlusGauss { sigma } => {
                -4.0 * (-4.0 * t).exp() + 0.5 * bump_derivative(t, 0.5, sigma)
            }
        }
    }
}

fn bump(t: f64, center: f64, sigma: f64) -> f64 {
    let x = (t - center) / sigma;
    (-0.5 * x * x).exp()
}

fn bump_derivative(t: f64, center: f64, sigma: f64) -> f64 {
    -(t - center) / (sigma * sigma) * bump(t, center, sigma)
}

/// Anisotropic 2-D Gaussian with its major axis rotated by `angle` radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianEllipsoid {
    pub x0: f64,
    pub y0: f64,
    pub sigma_par: f64,
    pub sigma_perp: f64,
    pub angle: f64,
}

impl GaussianEllipsoid {
    pub fn value(&self, x: f64, y: f64) -> f64 {
        let (s, c) = self.angle.sin_cos();
        let (dx, dy) = (x - self.x0, y - self.y0);
        let along = c * dx + s * dy;
        let across = -s * dx + c * dy;
        (-0.5 * (along / self.sigma_par).powi(2) - 0.5 * (across / self.sigma_perp).powi(2)).exp()
    }
}

/// Sum of Gaussian ellipsoids on the unit square.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipsoidField {
    pub components: Vec<GaussianEllipsoid>,
}

impl EllipsoidField {
    /// Two ellipsoids with perpendicular major axes and the given transverse width.
    pub fn crossed(sigma_perp: f64) -> Self {
        let deg = std::f64::consts::PI / 180.0;
        Self {
            components: vec![
                GaussianEllipsoid {
                    x0: 0.4,
                    y0: 0.45,
                    sigma_par: 0.15,
                    sigma_perp,
                    angle: 30.0 * deg,
                },
                GaussianEllipsoid {
                    x0: 0.6,
                    y0: 0.55,
                    sigma_par: 0.15,
                    sigma_perp,
                    angle: 120.0 * deg,
                },
            ],
        }
    }

    /// Two nearby ellipsoids whose major axes meet at 20 degrees.
    pub fn inclined(sigma_perp: f64) -> Self {
        let deg = std::f64::consts::PI / 180.0;
        Self {
            components: vec![
                GaussianEllipsoid {
                    x0: 0.45,
                    y0: 0.5,
                    sigma_par: 0.15,
                    sigma_perp,
                    angle: 0.0,
                },
                GaussianEllipsoid {
                    x0: 0.55,
                    y0: 0.5,
                    sigma_par: 0.15,
                    sigma_perp,
                    angle: 20.0 * deg,
                },
            ],
        }
    }

    /// Field of the crossed-ellipsoid figure (`sigma_perp = 0.025`).
    pub fn figure5() -> Self {
        Self::crossed(0.025)
    }

    /// Field of the inclined-ellipsoid figure (`sigma_perp = 0.05`).
    pub fn figure6() -> Self {
        Self::inclined(0.05)
    }

    pub fn value(&self, x: f64, y: f64) -> f64 {
        self.components.iter().map(|c| c.value(x, y)).sum()
    }
}
