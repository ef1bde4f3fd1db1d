#include "gcgeo/cech.hpp"

#include "gcgeo/error.hpp"

namespace gcgeo {

BbaTransform cech_overlap(const BbaTransform& ta, const BbaTransform& tb) {
  Scalar half(Rational(1, 2));
  Polyform B = ta.B - tb.B + (wedge(ta.b, tb.a) + wedge(ta.a, tb.b)) * half;
  return {B, ta.b - tb.b, ta.a - tb.a};
}

Report validate_cech(const FrameAlgebra& frame, const CechDatum& cd, const Twists& expected,
                     const CechDatum* second) {
  Report r;
  for (const auto& name : cd.patches)
    if (!cd.data.count(name)) fail(errc::input, "missing patch data for '" + name + "'");

  // (i) every patch generates the expected twists.
  for (const auto& name : cd.patches) {
    const BbaTransform& t = cd.data.at(name);
    Twists curv = curvature_twists(frame, t);
    Polyform d3 = curv.H3 - expected.H3;
    Polyform d2 = curv.H2 - expected.H2;
    Polyform dF = curv.F - expected.F;
    bool ok = d3.is_zero() && d2.is_zero() && dF.is_zero();
    r.check("cech.curvature." + name, ok,
            ok ? "" : "(H3: " + d3.str() + ", H2: " + d2.str() + ", F: " + dF.str() + ")",
            "patch potentials must reproduce the twists");
  }

  // (ii) cocycle over ordered triples, overlaps applied in display order.
  bool cocycle_ok = true;
  std::string offender, residual;
  for (const auto& pa : cd.patches)
    for (const auto& pb : cd.patches)
      for (const auto& pc : cd.patches) {
        if (pa == pb || pb == pc || pa == pc) continue;
        BbaTransform tab = cech_overlap(cd.data.at(pa), cd.data.at(pb));
        BbaTransform tbc = cech_overlap(cd.data.at(pb), cd.data.at(pc));
        BbaTransform tca = cech_overlap(cd.data.at(pc), cd.data.at(pa));
        BbaTransform prod = compose_transforms(tca, compose_transforms(tbc, tab));
        if (!(prod.B.is_zero() && prod.b.is_zero() && prod.a.is_zero())) {
          cocycle_ok = false;
          offender = "(" + pa + "," + pb + "," + pc + ")";
          residual = "B: " + prod.B.str() + ", b: " + prod.b.str() + ", a: " + prod.a.str();
        }
        if (!cocycle_ok) break;
      }
  r.check("cech.cocycle", cocycle_ok, residual,
          cocycle_ok ? "all ordered triples close" : "offending triple " + offender);

  // (iii) gauge comparison with a second datum.
  if (second) {
    bool shape_ok = second->patches == cd.patches;
    std::optional<BbaTransform> gauge;
    std::string why;
    if (!shape_ok) {
      why = "patch sets differ";
    } else {
      for (const auto& name : cd.patches) {
        const BbaTransform& t = cd.data.at(name);
        auto it = second->data.find(name);
        if (it == second->data.end()) {
          shape_ok = false;
          why = "missing patch '" + name + "' in second datum";
          break;
        }
        const BbaTransform& tp = it->second;
        Polyform b2 = tp.b - t.b;
        Polyform a2 = tp.a - t.a;
        Scalar half(Rational(1, 2));
        Polyform B2 = tp.B - t.B + (wedge(t.b, a2) + wedge(t.a, b2)) * half;
        BbaTransform cand{B2, b2, a2};
        if (!gauge) {
          gauge = cand;
        } else if (!(*gauge == cand)) {
          shape_ok = false;
          why = "difference is not a single global (B'',b'',a'') (patch '" + name + "')";
          break;
        }
      }
    }
    if (shape_ok && gauge) {
      Polyform gb = frame.d(gauge->b);
      Polyform ga = frame.d(gauge->a);
      Polyform gB = frame.d(gauge->B) - wedge(gauge->a, expected.H2) - wedge(gauge->b, expected.F);
      bool ok = gb.is_zero() && ga.is_zero() && gB.is_zero();
      r.check("cech.gauge", ok,
              ok ? "" : "(dB''-a''^H2-b''^F: " + gB.str() + ", db'': " + gb.str() +
                            ", da'': " + ga.str() + ")",
              "global (B'',b'',a'') preserving the twists: db''=0, da''=0, "
              "dB''=a''^H2+b''^F");
    } else {
      r.fail("cech.gauge", "", why);
    }
  }
  return r;
}

}  // namespace gcgeo
