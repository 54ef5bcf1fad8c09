//! The registered identities. Each one pairs a brute-force side, built from
//! explicit 16×16 matrices, with the closed form as stated.

use crate::fiber_algebra::{Covector, Fiber, FiberEndo, Params};
use crate::scalar_ring::ParamScalar;

/// One side of an identity.
#[derive(Clone, Debug)]
pub enum Side {
    Matrix(FiberEndo),
    Scalar(ParamScalar),
}

/// Matrices and parameters shared by every tag.
pub struct Ctx {
    pub fiber: Fiber,
    pub params: Params,
}

impl Ctx {
    pub fn new(params: Params) -> Self {
        Self {
            fiber: Fiber::four(),
            params,
        }
    }

    pub fn a(&self) -> ParamScalar {
        self.params.a0.clone()
    }

    pub fn b(&self) -> ParamScalar {
        self.params.b0.clone()
    }

    fn ct(&self, v: &Covector) -> FiberEndo {
        self.fiber.c_tilde(v, &self.params)
    }

    fn cb(&self, v: &Covector) -> FiberEndo {
        self.fiber.c_bar(v, &self.params)
    }

    fn c(&self, v: &Covector) -> FiberEndo {
        self.fiber.c(v)
    }

    fn ch(&self, v: &Covector) -> FiberEndo {
        self.fiber.c_hat(v)
    }

    fn e(&self, v: &Covector) -> FiberEndo {
        self.fiber.eps(v)
    }

    fn i(&self, v: &Covector) -> FiberEndo {
        self.fiber.iota(v)
    }

    /// `ε(v)ι(v)`.
    fn ei(&self, v: &Covector) -> FiberEndo {
        self.e(v).mul(&self.i(v))
    }

    fn id(&self, s: ParamScalar) -> FiberEndo {
        FiberEndo::scalar(self.fiber.dim(), s)
    }

    /// `c̄(ξ)c(X) + c(X)c̃(ξ)`.
    fn anti(&self, t: &Inst) -> FiberEndo {
        self.cb(&t.xi)
            .mul(&self.c(&t.x))
            .add(&self.c(&t.x).mul(&self.ct(&t.xi)))
    }

    /// `c̃(u)c̃(v)c̃(w)`.
    fn uvw(&self, t: &Inst) -> FiberEndo {
        self.ct(&t.u).mul(&self.ct(&t.v)).mul(&self.ct(&t.w))
    }

    fn tr(&self, ms: &[FiberEndo]) -> ParamScalar {
        let (last, rest) = ms.split_last().expect("non-empty product");
        match rest.split_first() {
            None => last.trace(),
            Some((first, mid)) => mid
                .iter()
                .fold(first.clone(), |acc, m| acc.mul(m))
                .trace_of_product(last),
        }
    }
}

/// One random instantiation. On the boundary `xi` is a unit `ξ′` orthogonal
/// to `n = dx_n`.
#[derive(Clone, Debug)]
pub struct Inst {
    pub u: Covector,
    pub v: Covector,
    pub w: Covector,
    pub x: Covector,
    pub xi: Covector,
    pub n: Covector,
}

impl Inst {
    pub fn get(&self, name: &str) -> &Covector {
        match name {
            "u" => &self.u,
            "v" => &self.v,
            "w" => &self.w,
            "X" => &self.x,
            "xi" => &self.xi,
            "n" => &self.n,
            _ => panic!("unknown vector {name}"),
        }
    }

    pub fn g(&self, p: &str, q: &str) -> ParamScalar {
        self.get(p).dot(self.get(q))
    }

    /// `g(u,y)g(v,w) − g(v,y)g(u,w) + g(w,y)g(u,v)`.
    pub fn bracket(&self, y: &str) -> ParamScalar {
        self.g("u", y) * self.g("v", "w") - self.g("v", y) * self.g("u", "w")
            + self.g("w", y) * self.g("u", "v")
    }

    fn xx(&self) -> ParamScalar {
        self.g("xi", "xi")
    }

    fn x_xi(&self) -> ParamScalar {
        self.g("X", "xi")
    }
}

pub struct IdentityTag {
    pub name: &'static str,
    pub statement: &'static str,
    /// Samples `ξ′ ∈ S²` with `ξ′ ⊥ dx_n` instead of a free `ξ`.
    pub boundary: bool,
    /// Vectors and multiplicities the fit pairs up. Empty for matrix
    /// identities, which are not fitted.
    pub vars: &'static [(&'static str, u32)],
    pub brute: fn(&Ctx, &Inst) -> Side,
    pub closed: fn(&Ctx, &Inst) -> Side,
}

fn q(n: i64, d: i64) -> ParamScalar {
    ParamScalar::from_frac(n, d)
}

fn sixteen() -> ParamScalar {
    ParamScalar::from_int(16)
}

const UVWX: &[(&str, u32)] = &[("u", 1), ("v", 1), ("w", 1), ("X", 1)];

pub fn registry() -> Vec<IdentityTag> {
    vec![
        // Clifford relations
        IdentityTag {
            name: "clifford/hat-hat",
            statement: "c^(u)c^(v) + c^(v)c^(u) = 2 g(u,v)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.ch(&t.u).anticommutator(&c.ch(&t.v))),
            closed: |c, t| Side::Matrix(c.id(q(2, 1) * t.g("u", "v"))),
        },
        IdentityTag {
            name: "clifford/c-c",
            statement: "c(u)c(v) + c(v)c(u) = -2 g(u,v)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.c(&t.u).anticommutator(&c.c(&t.v))),
            closed: |c, t| Side::Matrix(c.id(q(-2, 1) * t.g("u", "v"))),
        },
        IdentityTag {
            name: "clifford/c-hat",
            statement: "c(u)c^(v) + c^(v)c(u) = 0",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.c(&t.u).anticommutator(&c.ch(&t.v))),
            closed: |c, _| Side::Matrix(c.id(ParamScalar::zero())),
        },
        // weighted anticommutators
        IdentityTag {
            name: "tilde/tilde-c",
            statement: "c~(u)c(v) + c(v)c~(u) = -(a0 + b0) g(u,v)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.ct(&t.u).anticommutator(&c.c(&t.v))),
            closed: |c, t| Side::Matrix(c.id(-(c.a() + c.b()) * t.g("u", "v"))),
        },
        IdentityTag {
            name: "tilde/tilde-tilde",
            statement: "c~(u)c~(v) + c~(v)c~(u) = -2 a0 b0 g(u,v)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.ct(&t.u).anticommutator(&c.ct(&t.v))),
            closed: |c, t| Side::Matrix(c.id(q(-2, 1) * c.a() * c.b() * t.g("u", "v"))),
        },
        IdentityTag {
            name: "tilde/tilde-hat",
            statement: "c~(u)c^(v) + c^(v)c~(u) = (a0 - b0) g(u,v)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.ct(&t.u).anticommutator(&c.ch(&t.v))),
            closed: |c, t| Side::Matrix(c.id((c.a() - c.b()) * t.g("u", "v"))),
        },
        // torsion traces
        IdentityTag {
            name: "torsion-trace/cX",
            statement: "Tr(c~(u)c~(v)c~(w)c(X)) = a0 b0 (a0 + b0)/2 [g(u,X)g(v,w) - g(v,X)g(u,w) + g(w,X)g(u,v)] Tr(Id)",
            boundary: false,
            vars: UVWX,
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.c(&t.x)])),
            closed: |c, t| {
                Side::Scalar(c.a() * c.b() * (c.a() + c.b()) * q(1, 2) * t.bracket("X") * sixteen())
            },
        },
        IdentityTag {
            name: "torsion-trace/cX-eps-iota",
            statement: "Tr(c~(u)c~(v)c~(w)c(X)eps(xi)iota(xi)) = a0 b0 |xi|^2 (a0 + b0)/4 [g(u,X)g(v,w) - g(v,X)g(u,w) + g(w,X)g(u,v)] Tr(Id) + (a0^2 b0 - a0 b0^2)/4 xi(X) [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("X", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.c(&t.x), c.ei(&t.xi)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                let first = a.clone() * &b * t.xx() * (a.clone() + &b) * q(1, 4) * t.bracket("X");
                let second = (a.clone() * &a * &b - a * &b * &b) * q(1, 4) * t.x_xi() * t.bracket("xi");
                Side::Scalar((first + second) * sixteen())
            },
        },
        IdentityTag {
            name: "torsion-aux/pair-eps-iota",
            statement: "Tr(c~(u)c~(v)eps(xi)iota(xi)) = -a0 b0/2 |xi|^2 g(u,v) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.ct(&t.v), c.ei(&t.xi)])),
            closed: |c, t| Side::Scalar(q(-1, 2) * c.a() * c.b() * t.xx() * t.g("u", "v") * sixteen()),
        },
        IdentityTag {
            name: "torsion-aux/triple-iota",
            statement: "Tr(c~(u)c~(v)c~(w)iota(xi)) = -a0^2 b0/4 [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("xi", 1)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.i(&t.xi)])),
            closed: |c, t| Side::Scalar(q(-1, 4) * c.a() * c.a() * c.b() * t.bracket("xi") * sixteen()),
        },
        IdentityTag {
            name: "torsion-aux/triple-eps",
            statement: "Tr(c~(u)c~(v)c~(w)eps(xi)) = a0 b0^2/4 [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("xi", 1)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.e(&t.xi)])),
            closed: |c, t| Side::Scalar(q(1, 4) * c.a() * c.b() * c.b() * t.bracket("xi") * sixteen()),
        },
        // σ₋₅-type torsion traces
        IdentityTag {
            name: "torsion-xi/plain",
            statement: "Tr(c~(u)c~(v)c~(w)c~(xi)(c-(xi)c(X) + c(X)c~(xi))) = -a0^2 b0^2 (a0 + b0) xi(X) [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("X", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.ct(&t.xi), c.anti(t)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                Side::Scalar(-(a.clone() * &a * &b * &b * (a + &b)) * t.x_xi() * t.bracket("xi") * sixteen())
            },
        },
        IdentityTag {
            name: "torsion-xi/right",
            statement: "Tr(c~(u)c~(v)c~(w)c~(xi)(c-(xi)c(X) + c(X)c~(xi))eps(xi)iota(xi)) = (a0^4 b0 - 5 a0^2 b0^3)/4 |xi|^2 xi(X) [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id) - a0^2 b0 (a0 + b0)(a0 - b0)/4 |xi|^4 [g(X,w)g(u,v) - g(X,v)g(u,w) + g(X,u)g(v,w)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("X", 1), ("xi", 4)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.ct(&t.xi), c.anti(t), c.ei(&t.xi)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                let a2 = a.clone() * &a;
                let first = (a2.clone() * &a2 * &b - q(5, 1) * &a2 * &b * &b * &b)
                    * q(1, 4)
                    * t.xx()
                    * t.x_xi()
                    * t.bracket("xi");
                let second = a2 * &b * (a.clone() + &b) * (a - &b) * q(1, 4) * t.xx() * t.xx() * t.bracket("X");
                Side::Scalar((first - second) * sixteen())
            },
        },
        IdentityTag {
            name: "torsion-xi/left",
            statement: "Tr(c~(u)c~(v)c~(w)c~(xi)eps(xi)iota(xi)(c-(xi)c(X) + c(X)c~(xi))) = -a0^2 b0^3 |xi|^2 xi(X) [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("X", 1), ("xi", 4)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.ct(&t.xi), c.ei(&t.xi), c.anti(t)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                Side::Scalar(-(a.clone() * &a * &b * &b * &b) * t.xx() * t.x_xi() * t.bracket("xi") * sixteen())
            },
        },
        IdentityTag {
            name: "torsion-xi/both",
            statement: "Tr(c~(u)c~(v)c~(w)c~(xi)eps(xi)iota(xi)(c-(xi)c(X) + c(X)c~(xi))eps(xi)iota(xi)) = -a0^2 b0^3 |xi|^4 xi(X) [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("X", 1), ("xi", 6)],
            brute: |c, t| {
                Side::Scalar(c.tr(&[c.uvw(t), c.ct(&t.xi), c.ei(&t.xi), c.anti(t), c.ei(&t.xi)]))
            },
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                Side::Scalar(
                    -(a.clone() * &a * &b * &b * &b) * t.xx() * t.xx() * t.x_xi() * t.bracket("xi") * sixteen(),
                )
            },
        },
        // intermediate steps of the σ₋₅-type traces
        IdentityTag {
            name: "torsion-step/anticommutator",
            statement: "c-(xi)c(X) + c(X)c~(xi) = (a0 - b0)(eps(X)eps(xi) - iota(X)iota(xi) + eps(X)iota(xi) - iota(X)eps(xi)) - (a0 + b0) xi(X)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.anti(t)),
            closed: |c, t| {
                let (x, xi) = (&t.x, &t.xi);
                let m = c
                    .e(x)
                    .mul(&c.e(xi))
                    .sub(&c.i(x).mul(&c.i(xi)))
                    .add(&c.e(x).mul(&c.i(xi)))
                    .sub(&c.i(x).mul(&c.e(xi)));
                Side::Matrix(m.scale(&(c.a() - c.b())).sub(&c.id((c.a() + c.b()) * t.x_xi())))
            },
        },
        IdentityTag {
            name: "torsion-step/anticommutator-eps-iota",
            statement: "(c-(xi)c(X) + c(X)c~(xi))eps(xi)iota(xi) = (a0 - b0)|xi|^2 c(X)iota(xi) - (a0 + b0) xi(X) eps(xi)iota(xi)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.anti(t).mul(&c.ei(&t.xi))),
            closed: |c, t| {
                let l = c.c(&t.x).mul(&c.i(&t.xi)).scale(&((c.a() - c.b()) * t.xx()));
                Side::Matrix(l.sub(&c.ei(&t.xi).scale(&((c.a() + c.b()) * t.x_xi()))))
            },
        },
        IdentityTag {
            name: "torsion-step/eps-iota-anticommutator",
            statement: "eps(xi)iota(xi)(c-(xi)c(X) + c(X)c~(xi)) = (a0 - b0)|xi|^2 (xi(X) + c(X)eps(xi)) - (a0 + b0) xi(X) eps(xi)iota(xi)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.ei(&t.xi).mul(&c.anti(t))),
            closed: |c, t| {
                let inner = c.id(t.x_xi()).add(&c.c(&t.x).mul(&c.e(&t.xi)));
                let l = inner.scale(&((c.a() - c.b()) * t.xx()));
                Side::Matrix(l.sub(&c.ei(&t.xi).scale(&((c.a() + c.b()) * t.x_xi()))))
            },
        },
        IdentityTag {
            name: "torsion-step/sandwich",
            statement: "eps(xi)iota(xi)(c-(xi)c(X) + c(X)c~(xi))eps(xi)iota(xi) = -2 b0 |xi|^2 xi(X) eps(xi)iota(xi)",
            boundary: false,
            vars: &[],
            brute: |c, t| Side::Matrix(c.ei(&t.xi).mul(&c.anti(t)).mul(&c.ei(&t.xi))),
            closed: |c, t| Side::Matrix(c.ei(&t.xi).scale(&(q(-2, 1) * c.b() * t.xx() * t.x_xi()))),
        },
        IdentityTag {
            name: "torsion-step/four-xi",
            statement: "Tr(c~(u)c~(v)c~(w)c~(xi)) = a0^2 b0^2 [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("xi", 1)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.ct(&t.xi)])),
            closed: |c, t| Side::Scalar(c.a() * c.a() * c.b() * c.b() * t.bracket("xi") * sixteen()),
        },
        IdentityTag {
            name: "torsion-step/pair-xi-iota",
            statement: "Tr(c~(u)c~(v)c~(xi)iota(xi)) = -a0^2 b0/2 |xi|^2 g(u,v) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.ct(&t.v), c.ct(&t.xi), c.i(&t.xi)])),
            closed: |c, t| Side::Scalar(q(-1, 2) * c.a() * c.a() * c.b() * t.xx() * t.g("u", "v") * sixteen()),
        },
        IdentityTag {
            name: "torsion-step/triple-iota",
            statement: "Tr(c~(u)c~(v)c~(w)iota(xi)) = -a0^2 b0/2 [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("xi", 1)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.i(&t.xi)])),
            closed: |c, t| Side::Scalar(q(-1, 2) * c.a() * c.a() * c.b() * t.bracket("xi") * sixteen()),
        },
        IdentityTag {
            name: "torsion-step/cX-iota",
            statement: "Tr(c~(u)c~(v)c~(w)c~(xi)c(X)iota(xi)) = a0^2 b0 (a0 + 3 b0)/4 xi(X) [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id) - a0^2 b0 (a0 + b0)/4 |xi|^2 [g(X,w)g(u,v) - g(X,v)g(u,w) + g(X,u)g(v,w)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("X", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.ct(&t.xi), c.c(&t.x), c.i(&t.xi)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                let a2b = a.clone() * &a * &b;
                let first = a2b.clone() * (a.clone() + q(3, 1) * &b) * q(1, 4) * t.x_xi() * t.bracket("xi");
                let second = a2b * (a + &b) * q(1, 4) * t.xx() * t.bracket("X");
                Side::Scalar((first - second) * sixteen())
            },
        },
        IdentityTag {
            name: "torsion-step/xi-eps-iota",
            statement: "Tr(c~(u)c~(v)c~(w)c~(xi)eps(xi)iota(xi)) = a0^2 b0^2/2 |xi|^2 [xi(u)g(v,w) - xi(v)g(u,w) + xi(w)g(u,v)] Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("xi", 3)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.ct(&t.xi), c.ei(&t.xi)])),
            closed: |c, t| {
                Side::Scalar(q(1, 2) * c.a() * c.a() * c.b() * c.b() * t.xx() * t.bracket("xi") * sixteen())
            },
        },
        // one-form traces
        IdentityTag {
            name: "one-form-trace/cX",
            statement: "Tr(c~(u)c(X)) = -(a0 + b0)/2 g(u,X) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("X", 1)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.c(&t.x)])),
            closed: |c, t| Side::Scalar(-(c.a() + c.b()) * q(1, 2) * t.g("u", "X") * sixteen()),
        },
        IdentityTag {
            name: "one-form-trace/cX-eps-iota",
            statement: "Tr(c~(u)c(X)eps(xi)iota(xi)) = 1/4 (-a0 xi(X)xi(u) + b0 xi(X)xi(u) - (a0 + b0)|xi|^2 g(u,X)) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("X", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.c(&t.x), c.ei(&t.xi)])),
            closed: |c, t| {
                let s = (c.b() - c.a()) * t.x_xi() * t.g("xi", "u") - (c.a() + c.b()) * t.xx() * t.g("u", "X");
                Side::Scalar(q(1, 4) * s * sixteen())
            },
        },
        IdentityTag {
            name: "one-form-xi/plain",
            statement: "Tr(c~(u)c~(xi)(c-(xi)c(X) + c(X)c~(xi))) = a0 b0 (a0 + b0) xi(X)xi(u) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("X", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.ct(&t.xi), c.anti(t)])),
            closed: |c, t| {
                Side::Scalar(c.a() * c.b() * (c.a() + c.b()) * t.x_xi() * t.g("xi", "u") * sixteen())
            },
        },
        IdentityTag {
            name: "one-form-xi/right",
            statement: "Tr(c~(u)c~(xi)(c-(xi)c(X) + c(X)c~(xi))eps(xi)iota(xi)) = (a0(3 b0^2 - a0^2)/2 |xi|^2 xi(X)xi(u) + a0(a0^2 - b0^2)/2 |xi|^2 g(u,X)) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("X", 1), ("xi", 4)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.ct(&t.xi), c.anti(t), c.ei(&t.xi)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                let first = a.clone() * (q(3, 1) * &b * &b - a.clone() * &a) * q(1, 2) * t.xx() * t.x_xi() * t.g("xi", "u");
                let second = a.clone() * (a.clone() * &a - b.clone() * &b) * q(1, 2) * t.xx() * t.g("u", "X");
                Side::Scalar((first + second) * sixteen())
            },
        },
        IdentityTag {
            name: "one-form-xi/left",
            statement: "Tr(c~(u)c~(xi)eps(xi)iota(xi)(c-(xi)c(X) + c(X)c~(xi))) = ((a0^3 b0 - a0 b0^3 + 2 a0 b0^2)/2 |xi|^2 xi(X)xi(u) - b0(a0^2 - b0^2)/4 |xi|^2 g(u,X)) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("X", 1), ("xi", 4)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.ct(&t.xi), c.ei(&t.xi), c.anti(t)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                let poly = a.clone() * &a * &a * &b - a.clone() * &b * &b * &b + q(2, 1) * &a * &b * &b;
                let first = poly * q(1, 2) * t.xx() * t.x_xi() * t.g("xi", "u");
                let second = b.clone() * (a.clone() * &a - b.clone() * &b) * q(1, 4) * t.xx() * t.g("u", "X");
                Side::Scalar((first - second) * sixteen())
            },
        },
        IdentityTag {
            name: "one-form-xi/both",
            statement: "Tr(c~(u)c~(xi)eps(xi)iota(xi)(c-(xi)c(X) + c(X)c~(xi))eps(xi)iota(xi)) = a0 b0^2 (a0 + b0) |xi|^4 xi(X)xi(u) Tr(Id)",
            boundary: false,
            vars: &[("u", 1), ("X", 1), ("xi", 6)],
            brute: |c, t| Side::Scalar(c.tr(&[c.ct(&t.u), c.ct(&t.xi), c.ei(&t.xi), c.anti(t), c.ei(&t.xi)])),
            closed: |c, t| {
                let (a, b) = (c.a(), c.b());
                Side::Scalar(a.clone() * &b * &b * (a + &b) * t.xx() * t.xx() * t.x_xi() * t.g("xi", "u") * sixteen())
            },
        },
        // boundary traces, ξ′ ⊥ dx_n and |ξ′| = 1
        IdentityTag {
            name: "boundary-trace/swap",
            statement: "eps(xi')eps(dxn)iota(xi') = -eps(xi')iota(xi')eps(dxn)",
            boundary: true,
            vars: &[],
            brute: |c, t| Side::Matrix(c.e(&t.xi).mul(&c.e(&t.n)).mul(&c.i(&t.xi))),
            closed: |c, t| Side::Matrix(c.ei(&t.xi).mul(&c.e(&t.n)).neg()),
        },
        IdentityTag {
            name: "boundary-trace/eps-n-eps-iota",
            statement: "Tr(c~(u)c~(v)c~(w)eps(xi')eps(dxn)iota(xi')) = -a0 b0^2/4 |xi'|^2 (u_n g(v,w) - v_n g(u,w) + w_n g(u,v))",
            boundary: true,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("n", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.e(&t.xi), c.e(&t.n), c.i(&t.xi)])),
            closed: |c, t| Side::Scalar(q(-1, 4) * c.a() * c.b() * c.b() * t.xx() * t.bracket("n")),
        },
        IdentityTag {
            name: "boundary-trace/iota-eps-iota-n",
            statement: "Tr(c~(u)c~(v)c~(w)iota(xi')eps(xi')iota(dxn)) = -a0^2 b0/4 |xi'|^2 (u_n g(v,w) - v_n g(u,w) + w_n g(u,v))",
            boundary: true,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("n", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.i(&t.xi), c.e(&t.xi), c.i(&t.n)])),
            closed: |c, t| Side::Scalar(q(-1, 4) * c.a() * c.a() * c.b() * t.xx() * t.bracket("n")),
        },
        IdentityTag {
            name: "boundary-trace/eps-n",
            statement: "Tr(c~(u)c~(v)c~(w)eps(dxn)) = a0 b0^2/2 (u_n g(v,w) - v_n g(u,w) + w_n g(u,v)) Tr(Id)",
            boundary: true,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("n", 1)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.e(&t.n)])),
            closed: |c, t| Side::Scalar(q(1, 2) * c.a() * c.b() * c.b() * t.bracket("n") * sixteen()),
        },
        IdentityTag {
            name: "boundary-trace/iota-n",
            statement: "Tr(c~(u)c~(v)c~(w)iota(dxn)) = -a0^2 b0/2 (u_n g(v,w) - v_n g(u,w) + w_n g(u,v)) Tr(Id)",
            boundary: true,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("n", 1)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.i(&t.n)])),
            closed: |c, t| Side::Scalar(q(-1, 2) * c.a() * c.a() * c.b() * t.bracket("n") * sixteen()),
        },
        IdentityTag {
            name: "boundary-trace/iota-n-eps-n-iota-n",
            statement: "Tr(c~(u)c~(v)c~(w)iota(dxn)eps(dxn)iota(dxn)) = -a0^2 b0/2 |dxn|^2 (u_n g(v,w) - v_n g(u,w) + w_n g(u,v)) Tr(Id)",
            boundary: true,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("n", 3)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.i(&t.n), c.e(&t.n), c.i(&t.n)])),
            closed: |c, t| {
                Side::Scalar(q(-1, 2) * c.a() * c.a() * c.b() * t.g("n", "n") * t.bracket("n") * sixteen())
            },
        },
        IdentityTag {
            name: "boundary-trace/iota-n-eps-iota",
            statement: "Tr(c~(u)c~(v)c~(w)iota(dxn)eps(xi')iota(xi')) = -a0^2 b0/4 |xi'|^2 (u_n g(v,w) - v_n g(u,w) + w_n g(u,v)) Tr(Id)",
            boundary: true,
            vars: &[("u", 1), ("v", 1), ("w", 1), ("n", 1), ("xi", 2)],
            brute: |c, t| Side::Scalar(c.tr(&[c.uvw(t), c.i(&t.n), c.ei(&t.xi)])),
            closed: |c, t| Side::Scalar(q(-1, 4) * c.a() * c.a() * c.b() * t.xx() * t.bracket("n") * sixteen()),
        },
    ]
}
