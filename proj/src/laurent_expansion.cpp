#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"

namespace indcluster {

LaurentExpansion laurent_expansion(const Partition& p, int rows, int cols, const LaurentOptions& opts) {
  if (!p.fits(rows, cols))
    throw Error(ErrorCode::DoesNotFitBox, p.to_string() + " does not fit " + std::to_string(rows) + "x" +
                                              std::to_string(cols));
  if (opts.exact && rows + cols > 6)
    throw Error(ErrorCode::InvalidArgument, "exact verification is limited to m + n <= 6");
  const Seed initial = rect_seed(rows, cols);
  LaurentExpansion out;
  out.target = p;
  out.rows = rows;
  out.cols = cols;
  out.path = square_move_path(initial, p, opts.max_states);
  Seed s = initial;
  for (const auto& label : out.path) s = square_move(s, *s.find_label(label));
  out.poly = s.expr(*s.find_label(p));

  std::mt19937_64 rng(opts.rng_seed);
  out.oracle_ok = true;
  int attempts = 0;
  while (out.points_verified < opts.verify_points) {
    if (++attempts > 100 * std::max(1, opts.verify_points))
      throw Error(ErrorCode::InvalidArgument, "could not sample matrices with nonzero rectangle minors");
    MinorsOracle oracle(rows, cols, random_matrix(rows, rows + cols, rng));
    Assignment values = oracle.assignment(initial);
    bool degenerate = false;
    for (const auto& [v, x] : values) degenerate = degenerate || x == 0;
    if (degenerate) continue;
    if (lp_eval(out.poly, values) != oracle(p)) out.oracle_ok = false;
    ++out.points_verified;
  }

  if (opts.exact) {
    // numerator(minors) == d_lambda(generic) * denominator(minors), a polynomial identity
    Substitution sub;
    for (const auto& cv : initial.vars()) sub[cv.id] = symbolic_minor(*cv.label, rows, cols);
    Monomial den = out.poly.denominator();
    LaurentPoly num = out.poly * LaurentPoly::term(1, den);
    LaurentPoly lhs = lp_substitute(num, sub);
    LaurentPoly rhs = symbolic_minor(p, rows, cols) * lp_substitute(LaurentPoly::term(1, den), sub);
    out.exact_checked = true;
    out.exact_ok = lhs == rhs;
  }
  return out;
}

}  // namespace indcluster
