#include "wb/geometry.hpp"

namespace wb {

ChristoffelModel christoffel_model(const ModelManifold& M, const Jet& rho) {
	if (!M.contains(rho.c[0])) throw GeometryError("radial point outside the model interval");
	Jet f = M.f.apply(rho), fd = M.f.apply_d(rho);
	if (f.c[0] == 0.0) throw GeometryError("warp vanishes at the evaluation point");
	return {-(f * fd), fd / f};
}

ChristoffelSurface christoffel_surface(const SurfaceOfRevolution& S, const Jet& alpha) {
	Jet f = S.f.apply(alpha), fd = S.f.apply_d(alpha);
	Jet h = S.h.apply(alpha), hd = S.h.apply_d(alpha);
	if (f.c[0] == 0.0) throw GeometryError("profile at a pole of the surface");
	return {fd / f, -(f * fd) / (h * h), hd / h};
}

Jet radial_laplacian(const ModelManifold& M, const WarpFunction& h_target, const Jet& alpha,
                     const Jet& F) {
	if (F.order() < 2) throw OrderTooLow("radial_laplacian needs a jet of order >= 2");
	int K = F.order() - 2;
	Jet rho = jet_var<double>(F.base, F.order());
	Jet f = M.f.apply(rho), fd = M.f.apply_d(rho);
	Jet hp = h_target.apply_d(alpha);
	double m1 = M.m - 1;
	Jet Fd = derivative(F), Fdd = derivative(Fd);
	Jet t1 = fit(Fdd, K);
	Jet t2 = lax::mul(lax::div(fd, f), Fd) * m1;
	Jet t3 = lax::div(lax::mul(lax::mul(hp, hp), F), lax::mul(f, f)) * m1;
	return -(t1 + fit(t2, K) - fit(t3, K));
}

Jet radial_divergence(const ModelManifold& M, const Jet& F) {
	if (F.order() < 1) throw OrderTooLow("radial_divergence needs a jet of order >= 1");
	int K = F.order() - 1;
	Jet rho = jet_var<double>(F.base, F.order());
	Jet f = M.f.apply(rho), fd = M.f.apply_d(rho);
	return derivative(F) + fit(lax::mul(lax::div(fd, f), F) * double(M.m - 1), K);
}

} // namespace wb
