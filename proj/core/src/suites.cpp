#include "amalgam/suites.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "amalgam/closure.hpp"
#include "amalgam/orbits.hpp"
#include "amalgam/presentation.hpp"

namespace amalgam {

namespace {

std::string one_line(const MatrixR& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < kDim; ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < kDim; ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).to_string();
    }
  }
  return out + "]";
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

struct Named {
  std::string name;
  const MatrixR* m;
};

std::vector<Named> all_named(const Generators& g) {
  return {{"a", &g.a}, {"b", &g.b}, {"c", &g.c}, {"d", &g.d}, {"f", &g.f}};
}

}  // namespace

Spectrum spectrum(const MatrixR& m) {
  Spectrum s;
  s.poly = char_poly(m);
  try {
    s.order = element_order(m);
  } catch (const OrderExceedsCap&) {
    s.order.reset();
  }
  s.self_reciprocal = is_self_reciprocal(s.poly);
  return s;
}

VerificationReport verify_exact(const Generators& g) {
  VerificationReport report("verify exact", 0);

  bool all_unitary = true;
  for (const auto& [name, m] : all_named(g)) {
    const Check& c = report.run("exact.unitary." + name, name + " is unitary: m * adjoint(m) = I", [&] {
      const MatrixR prod = *m * adjoint(*m);
      return Outcome::expect(prod.is_identity(), prod.is_identity() ? "" : "m*adjoint(m) = " + one_line(prod));
    });
    if (name != "f") all_unitary = all_unitary && c.status == CheckStatus::pass;
  }
  for (const auto& [name, m] : all_named(g)) {
    report.run("exact.det." + name, "det " + name + " = 1", [&] {
      const RingElem d = det(*m);
      return Outcome::expect(d.is_one(), "det = " + d.to_string());
    });
  }

  const std::vector<std::pair<std::string, unsigned long>> orders{
      {"a", 4}, {"b", 2}, {"c", 3}, {"d", 3}, {"bc", 8}, {"ad", 2}};
  for (const auto& [word, expected] : orders) {
    report.run("exact.order." + word, word + " has order " + std::to_string(expected), [&] {
      const unsigned long n = element_order(evaluate_word(g, word));
      return Outcome::expect(n == expected, "order " + std::to_string(n));
    });
  }

  const auto needs_unitary = [&](const std::function<Outcome()>& body) -> std::function<Outcome()> {
    return [&, body] {
      if (!all_unitary) return Outcome::fail("a, b, c, d not all unitary; adjoints are not inverses");
      return body();
    };
  };

  report.run("exact.bc4.central", "(bc)^4 != I commutes with b and with c", [&] {
    const MatrixR z = power(g.b * g.c, 4);
    const bool nontrivial = !z.is_identity();
    const bool with_b = z * g.b == g.b * z;
    const bool with_c = z * g.c == g.c * z;
    return Outcome::expect(nontrivial && with_b && with_c, "(bc)^4 = " + one_line(z));
  });

  report.run("exact.a_word", "a = (c^-1 b c^-1)^2", needs_unitary([&] {
               const MatrixR ci = adjoint(g.c);
               const MatrixR w = power(ci * g.b * ci, 2);
               if (w == g.a) return Outcome::pass();
               return Outcome::fail("(c^-1 b c^-1)^2 = " + one_line(w) +
                                    (w == adjoint(g.a) ? " = a^-1" : ""));
             }));

  report.run("exact.a_in_H", "a lies in <b,c>: (c b c)^2 = a, equivalently (c^-1 b c^-1)^2 = a^-1",
             needs_unitary([&] {
               const MatrixR ci = adjoint(g.c);
               const bool fwd = power(g.c * g.b * g.c, 2) == g.a;
               const bool inv = power(ci * g.b * ci, 2) == adjoint(g.a);
               return Outcome::expect(fwd && inv, std::string("(cbc)^2 = a: ") + (fwd ? "yes" : "no") +
                                                      "; (c^-1 b c^-1)^2 = a^-1: " + (inv ? "yes" : "no"));
             }));

  report.run("exact.presentation.gl23",
             "<b,c> satisfies b^2 = c^3 = (bc)^8 = [b,(bc)^4] = [c,(bc)^4] = 1, has order 48, and has a "
             "non-central involution",
             [&] {
               const PresentationResult r = verify_presentation_gl23(g.b, g.c);
               std::string w;
               for (const auto& rel : r.relations) w += rel.relation + (rel.holds ? " ok; " : " FAILS; ");
               w += "order " + (r.closure_order ? std::to_string(*r.closure_order) : std::string("> cap"));
               if (r.noncentral_involution) w += "; non-central involution " + one_line(*r.noncentral_involution);
               return Outcome::expect(r.ok(), w);
             });

  std::optional<ExactClosure> D, K, H;
  const std::vector<std::tuple<std::string, std::string, std::vector<MatrixR>, std::size_t,
                               std::optional<ExactClosure>*>>
      closures{{"exact.closure.ab", "<a,b> is dihedral of order 8", {g.a, g.b}, 8, &D},
               {"exact.closure.abd", "K = <a,b,d> has order 24", {g.a, g.b, g.d}, 24, &K},
               {"exact.closure.bc", "H = <b,c> has order 48", {g.b, g.c}, 48, &H}};
  for (const auto& [id, claim, gens, expected, slot] : closures) {
    report.run(id, claim, needs_unitary([&, slot = slot, expected = expected] {
                 *slot = bfs_closure(gens);
                 const std::size_t n = (*slot)->size();
                 return Outcome::expect(n == expected, "order " + std::to_string(n));
               }));
  }

  report.run("exact.d_not_in_H", "K is not contained in H: d is not in <b,c>", [&] {
    if (!H) return Outcome::fail("closure of <b,c> unavailable");
    return Outcome::expect(!is_subgroup_member(g.d, *H), "d in H: " + std::string(H->contains(g.d) ? "yes" : "no"));
  });

  report.run("exact.intersection.HK", "H and K intersect in exactly <a,b>", [&] {
    if (!H || !K || !D) return Outcome::fail("closures unavailable");
    const ExactClosure meet = intersection(*H, *K);
    bool same = meet.size() == D->size();
    for (const MatrixR& x : D->elements()) same = same && meet.contains(x);
    return Outcome::expect(same && meet.size() == 8, "|H n K| = " + std::to_string(meet.size()));
  });

  report.run("exact.cayley_hamilton", "each generator and bc annihilates its characteristic polynomial", [&] {
    for (const std::string word : {"a", "b", "c", "d", "f", "bc"}) {
      const MatrixR m = evaluate_word(g, word);
      const MatrixR r = evaluate(char_poly(m), m);
      if (!(r == MatrixR{})) return Outcome::fail(word + ": p(m) = " + one_line(r));
    }
    return Outcome::pass();
  });

  report.run("exact.spectrum.bc",
             "(bc)^8 = I, (bc)^4 != I, and the eigenvalues of bc are not closed under inversion", [&] {
               const MatrixR bc = g.b * g.c;
               const bool eight = power(bc, 8).is_identity();
               const bool four = !power(bc, 4).is_identity();
               const CharPoly p = char_poly(bc);
               const bool recip = is_self_reciprocal(p);
               return Outcome::expect(eight && four && !recip,
                                      "char poly (ascending) " + p.to_string() +
                                          (recip ? "; self-reciprocal" : "; not self-reciprocal"));
             });

  return report;
}

std::vector<FqMatrix> reduced_group_generators(const Generators& g, const ReductionContext& ctx) {
  return {ctx.reduce(g.a), ctx.reduce(g.b), ctx.reduce(g.c), ctx.reduce(g.d)};
}

GroupOrderTarget theorem_target(const ReductionContext& ctx) {
  return group_order_formula(ctx.kind() == PrimeKind::split ? GroupFamily::SL : GroupFamily::SU, kDim, ctx.p());
}

VerificationReport verify_mod(const Generators& g, const ModOptions& options) {
  const std::uint32_t p = options.p;
  if (p < 3 || p >= kMaxPrime || !is_prime(p)) throw UnsupportedPrime(p);
  const ReductionContext ctx = ReductionContext::make(p, options.ideal);
  const Field& F = ctx.field();

  std::string command = "verify mod --prime " + std::to_string(p) + " --ideal " +
                        (options.ideal == IdealSign::plus ? "plus" : "minus") + " --level " +
                        (options.level == VerifyLevel::full ? "full" : "quick");
  VerificationReport report(command, options.seed);
  const std::string tag = "mod" + std::to_string(p) + ".";

  report.run(tag + "context", "-2 is a square mod p exactly when p = 1, 3 (mod 8)", [&] {
    const bool split_class = p % 8 == 1 || p % 8 == 3;
    return Outcome::expect(split_class == (ctx.kind() == PrimeKind::split), ctx.describe());
  });

  report.run(tag + "omega", "the image of w squares to -2", [&] {
    const FieldElem w = ctx.reduce(RingElem::omega());
    return Outcome::expect(F.mul(w, w) == F.from_int(-2), "w -> " + F.to_string(w));
  });

  report.run(tag + "homomorphism", "reduction is multiplicative and carries conjugation to Frobenius or to the other ideal",
             [&] {
               std::mt19937_64 rng(options.seed);
               std::uniform_int_distribution<int> len(1, 8);
               std::uniform_int_distribution<int> letter(0, 7);
               const std::string letters = "abcdABCD";
               const ReductionContext other =
                   ReductionContext::make(p, options.ideal == IdealSign::plus ? IdealSign::minus : IdealSign::plus);
               for (int trial = 0; trial < 20; ++trial) {
                 std::string u, v;
                 for (int i = len(rng); i > 0; --i) u += letters[letter(rng)];
                 for (int i = len(rng); i > 0; --i) v += letters[letter(rng)];
                 const MatrixR x = evaluate_word(g, u);
                 const MatrixR y = evaluate_word(g, v);
                 if (!(ctx.reduce(x * y) == mul(F, ctx.reduce(x), ctx.reduce(y)))) {
                   return Outcome::fail("reduce(xy) != reduce(x)reduce(y) for x = " + u + ", y = " + v);
                 }
                 MatrixR xc;
                 for (std::size_t i = 0; i < kDim; ++i)
                   for (std::size_t j = 0; j < kDim; ++j) xc(i, j) = conj(x(i, j));
                 const FqMatrix lhs = ctx.reduce(xc);
                 const FqMatrix rhs = ctx.kind() == PrimeKind::inert ? frobenius(F, ctx.reduce(x)) : other.reduce(x);
                 if (!(lhs == rhs)) return Outcome::fail("conjugation law fails for " + u);
               }
               return Outcome::pass("20 random word pairs");
             });

  for (const auto& [name, m] : all_named(g)) {
    report.run(tag + "det." + name, "reduced " + name + " has determinant 1", [&, m = m] {
      const FieldElem d = det(F, ctx.reduce(*m));
      const bool consistent = d == ctx.reduce(det(*m));
      return Outcome::expect(d == F.one() && consistent, "det = " + F.to_string(d));
    });
  }

  report.run(tag + "form", "at inert primes the reduced generators preserve the Hermitian form (SU containment)", [&] {
    if (ctx.kind() == PrimeKind::split) return Outcome::skip("split prime: containment in SL(5,p) is det = 1 only");
    for (const auto& [name, m] : all_named(g)) {
      if (!check_unitary_form(ctx.reduce(*m), ctx)) return Outcome::fail(name + " does not preserve the form");
    }
    return Outcome::pass("a, b, c, d, f preserve the form");
  });

  report.run(tag + "faithful.H", "reduction is injective on H = <b,c> (48 elements)", [&] {
    const std::size_t n = bfs_closure(F, {ctx.reduce(g.b), ctx.reduce(g.c)}, options.closure_cap).size();
    return Outcome::expect(n == 48, "order " + std::to_string(n));
  });
  report.run(tag + "faithful.K", "reduction is injective on K = <a,b,d> (24 elements)", [&] {
    const std::size_t n =
        bfs_closure(F, {ctx.reduce(g.a), ctx.reduce(g.b), ctx.reduce(g.d)}, options.closure_cap).size();
    return Outcome::expect(n == 24, "order " + std::to_string(n));
  });

  if (options.level == VerifyLevel::quick) return report;

  const std::vector<FqMatrix> gens = reduced_group_generators(g, ctx);
  ChainOptions chain = options.chain;
  chain.seed = options.seed;
  std::string domain_note;
  if (chain.domain == ActionDomain::vectors && options.auto_projective) {
    const PointSpace vectors(F, ActionDomain::vectors);
    const std::size_t estimate = vectors.slots() * sizeof(std::int32_t) * (kDim + 1);
    if (estimate > chain.max_memory) {
      chain.domain = ActionDomain::projective;
      domain_note = " (projective domain: vector chain would need ~" + std::to_string(estimate >> 20) + " MiB)";
    }
  }
  const std::string domain_name = chain.domain == ActionDomain::vectors ? "vectors" : "projective";

  if (p == 3) {
    report.run(tag + "order", "L_3 has order 7920", [&] {
      const OrderResult r = matrix_group_order(F, gens, chain);
      return Outcome::expect(r.order == 7920 && r.status == OrderStatus::exact,
                             "order " + r.order.get_str() + " (" + to_string(r.status) + ", " + domain_name +
                                 ", orbits " + join(r.orbit_sizes) + ")");
    });

    const std::vector<FqMatrix> on_points = column_action(gens);
    std::vector<std::vector<Point>> point_orbits;
    std::vector<std::vector<Point>> hyperplane_orbits;
    const auto sizes_of = [](const std::vector<std::vector<Point>>& orbits) {
      std::vector<std::uint64_t> sizes;
      for (const auto& o : orbits) sizes.push_back(o.size());
      std::sort(sizes.begin(), sizes.end());
      return sizes;
    };
    report.run(tag + "orbits", "L_3 has orbits of lengths 11 and 110 on the 121 projective points", [&] {
      point_orbits = projective_orbits(F, on_points);
      hyperplane_orbits = projective_orbits(F, gens);
      return Outcome::expect(sizes_of(point_orbits) == std::vector<std::uint64_t>{11, 110},
                             "orbit sizes " + join(sizes_of(point_orbits)) + " on points, " +
                                 join(sizes_of(hyperplane_orbits)) + " on hyperplanes");
    });

    report.run(tag + "dual", "the reduction at the other ideal above 3 is the contragredient of this one", [&] {
      const ReductionContext other =
          ReductionContext::make(3, options.ideal == IdealSign::plus ? IdealSign::minus : IdealSign::plus);
      const std::vector<FqMatrix> there = reduced_group_generators(g, other);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (there[i] != inverse(F, transpose(gens[i])))
          return Outcome::fail("generator " + std::to_string(i) + " is not the inverse transpose");
      }
      return Outcome::pass("g -> transpose(g)^-1 on a, b, c, d; point and hyperplane orbits swap");
    });

    // The 11-point action lives on points for one ideal and on hyperplanes for
    // the other.
    struct Action {
      const std::vector<FqMatrix>* gens;
      const std::vector<Point>* orbit;
      const char* where;
    };
    const auto orbit_of_size = [&](std::size_t n) -> std::optional<Action> {
      for (const auto& o : point_orbits)
        if (o.size() == n) return Action{&on_points, &o, "points"};
      for (const auto& o : hyperplane_orbits)
        if (o.size() == n) return Action{&gens, &o, "hyperplanes"};
      return std::nullopt;
    };

    report.run(tag + "m11.perm11", "the action on the 11-point orbit has order 7920", [&] {
      const auto act = orbit_of_size(11);
      if (!act) return Outcome::fail("no orbit of length 11");
      const PermGroup pg = perm_image(F, *act->gens, *act->orbit);
      return Outcome::expect(pg.degree() == 11 && pg.order() == 7920,
                             "order " + pg.order().get_str() + " on " + act->where);
    });

    report.run(tag + "m11.tower",
               "the 11-point action is sharply 4-transitive: tower [11,10,9,8], trivial 4-point stabilizer", [&] {
                 const auto act = orbit_of_size(11);
                 if (!act) return Outcome::fail("no orbit of length 11");
                 const PermGroup pg = perm_image(F, *act->gens, *act->orbit);
                 const auto tower = pg.transitivity_tower();
                 mpz_class product = 1;
                 for (auto t : tower) product *= static_cast<unsigned long>(t);
                 const bool ok = tower == std::vector<std::uint64_t>{11, 10, 9, 8} && product == pg.order();
                 return Outcome::expect(ok, "tower " + join(tower) + " on " + act->where);
               });

    report.run(tag + "m11.perm110", "the action on the 110-point orbit is faithful (order 7920)", [&] {
      const auto act = orbit_of_size(110);
      if (!act) return Outcome::fail("no orbit of length 110");
      const PermGroup pg = perm_image(F, *act->gens, *act->orbit);
      return Outcome::expect(pg.order() == 7920, "order " + pg.order().get_str() + " on " + act->where);
    });

    report.run(tag + "ea_rank", "L_3 has no elementary abelian subgroup of order 8 (2-rank 2)", [&] {
      const FqClosure L3 = bfs_closure(F, gens, options.closure_cap);
      const int rank = elementary_abelian_2_rank(L3);
      return Outcome::expect(L3.size() == 7920 && rank == 2,
                             "closure " + std::to_string(L3.size()) + ", 2-rank " + std::to_string(rank));
    });

    report.run(tag + "bf", "<b,f> has order 80 and an elementary abelian subgroup of order 16", [&] {
      const FqClosure bf = bfs_closure(F, {ctx.reduce(g.b), ctx.reduce(g.f)}, options.closure_cap);
      const int rank = elementary_abelian_2_rank(bf);
      return Outcome::expect(bf.size() == 80 && rank == 4,
                             "closure " + std::to_string(bf.size()) + ", 2-rank " + std::to_string(rank));
    });
    return report;
  }

  const GroupOrderTarget target = theorem_target(ctx);
  report.run(tag + "order", "L_p is " + target.name() + " (order certified against the formula)", [&] {
    try {
      const OrderResult r = matrix_group_order(F, gens, chain, target);
      const std::string w = "order " + r.order.get_str() + " vs |" + target.name() + "| = " +
                            target.value.get_str() + " (" + to_string(r.status) + ", " + domain_name + domain_note +
                            ", orbits " + join(r.orbit_sizes) + ", scalar kernel " +
                            std::to_string(r.scalar_kernel) + ", " + std::to_string(r.random_elements) +
                            " random elements)";
      return Outcome::expect(r.order == target.value, w);
    } catch (const Inconclusive& e) {
      return Outcome::inconclusive(e.what());
    }
  });
  return report;
}

}  // namespace amalgam
