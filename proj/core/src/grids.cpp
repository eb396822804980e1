#include "hermiq/grids.hpp"

#include <algorithm>
#include <sstream>

namespace hermiq {

std::vector<GridCell> grid_cells(const Curve& curve, int delta, int delta_prime) {
  if (!curve.is_designed(delta) || !curve.is_designed(delta_prime) || delta_prime > delta)
    throw PreconditionError("grids require designed distances with delta' <= delta");
  const int q = curve.q();
  std::vector<GridCell> cells;
  cells.reserve(curve.n());
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < q * q; ++i) {
      const int lambda = i * q + j * (q + 1);
      const SemigroupElement& e = curve.element(lambda);
      cells.push_back({i, j, lambda, e.sigma, e.mu, e.mu < delta, e.sigma >= delta,
                       e.sigma >= delta_prime && e.sigma < delta});
    }
  return cells;
}

std::string render_grids(const Curve& curve, int delta, int delta_prime) {
  const std::vector<GridCell> cells = grid_cells(curve, delta, delta_prime);
  const int q = curve.q();
  const int cols = q * q;

  auto marks = [](const GridCell& c) {
    std::string m;
    if (c.dual_basis) m += 'D';
    if (c.code) m += 'C';
    if (c.extra) m += 'E';
    return m;
  };

  std::ostringstream out;
  const char* titles[3] = {"pole orders", "sigma", "mu"};
  for (int grid = 0; grid < 3; ++grid) {
    out << titles[grid] << " (q=" << q << ", delta=" << delta << ", delta'=" << delta_prime << ")\n";
    size_t width = 0;
    std::vector<std::string> text(cells.size());
    for (size_t idx = 0; idx < cells.size(); ++idx) {
      const GridCell& c = cells[idx];
      const int v = grid == 0 ? c.lambda : grid == 1 ? c.sigma : c.mu;
      text[idx] = std::to_string(v) + marks(c);
      width = std::max(width, text[idx].size());
    }
    for (int j = 0; j < q; ++j) {
      for (int i = 0; i < cols; ++i) {
        const std::string& s = text[static_cast<size_t>(j) * cols + i];
        out << s << std::string(width + 1 - s.size(), ' ');
      }
      out << '\n';
    }
    if (grid < 2) out << '\n';
  }
  return out.str();
}

}  // namespace hermiq
