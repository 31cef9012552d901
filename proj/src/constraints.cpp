#include "kornlab/constraints.hpp"

#include "kornlab/errors.hpp"

namespace kornlab {

namespace {

bool mask_has(ComponentMask m, int c) {
  if (m == ComponentMask::Both) return true;
  return (m == ComponentMask::U) ? c == 0 : c == 1;
}

}  // namespace

ConstrainedSystem constrain(const Mesh2D& mesh, int components, const ConstraintSet& bc) {
  if (components != 1 && components != 2)
    throw ConfigError("constrain: components must be 1 or 2");
  const int n_nodes = mesh.n_nodes();
  const int full = components * n_nodes;

  std::vector<bool> eliminated(static_cast<size_t>(full), false);
  for (const DirichletZero& d : bc.dirichlet)
    for (Face f : d.faces.faces)
      for (int node : mesh.face_nodes(f))
        for (int c = 0; c < components; ++c)
          if (mask_has(d.comp, c)) eliminated[static_cast<size_t>(components * node + c)] = true;

  // partner[dof] = dof it is merged into (axial-end -> axial-start).
  std::vector<int> partner(static_cast<size_t>(full), -1);
  if (!bc.periodic.empty()) {
    if (!is_periodic_compatible(mesh.domain.phi1, mesh.domain.l) ||
        !is_periodic_compatible(mesh.domain.phi2, mesh.domain.l))
      throw PeriodicIncompatibleProfiles(
          "constrain: profiles do not match at y=0 and y=l; periodic pairing undefined");
    for (const PeriodicAxial& p : bc.periodic)
      for (int i = 0; i <= mesh.nx; ++i) {
        int start = mesh.node_id(i, 0);
        int end = mesh.node_id(i, mesh.ny);
        for (int c = 0; c < components; ++c)
          if (mask_has(p.comp, c)) {
            int de = components * end + c;
            int ds = components * start + c;
            if (eliminated[static_cast<size_t>(de)] || eliminated[static_cast<size_t>(ds)])
              throw ConfigError("constrain: periodic pairing hits an eliminated dof");
            partner[static_cast<size_t>(de)] = ds;
          }
      }
  }

  std::vector<int> reduced_index(static_cast<size_t>(full), -1);
  int reduced = 0;
  for (int dof = 0; dof < full; ++dof) {
    if (eliminated[static_cast<size_t>(dof)] || partner[static_cast<size_t>(dof)] >= 0) continue;
    reduced_index[static_cast<size_t>(dof)] = reduced++;
  }

  ConstrainedSystem cs;
  cs.full_size = full;
  cs.reduced_size = reduced;
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(full));
  for (int dof = 0; dof < full; ++dof) {
    if (eliminated[static_cast<size_t>(dof)]) continue;
    int target = partner[static_cast<size_t>(dof)] >= 0 ? partner[static_cast<size_t>(dof)] : dof;
    trips.emplace_back(dof, reduced_index[static_cast<size_t>(target)], 1.0);
  }
  cs.P.resize(full, reduced);
  cs.P.setFromTriplets(trips.begin(), trips.end());

  for (const DeflateConstants& d : bc.deflate)
    for (int c = 0; c < components; ++c) {
      if (!mask_has(d.comp, c)) continue;
      Eigen::VectorXd k = Eigen::VectorXd::Zero(reduced);
      bool any = false;
      for (int node = 0; node < n_nodes; ++node) {
        int dof = components * node + c;
        if (eliminated[static_cast<size_t>(dof)]) continue;
        int target =
            partner[static_cast<size_t>(dof)] >= 0 ? partner[static_cast<size_t>(dof)] : dof;
        int r = reduced_index[static_cast<size_t>(target)];
        if (k(r) == 0.0) any = true;
        k(r) = 1.0;
      }
      if (any) cs.deflation.push_back(std::move(k));
    }
  return cs;
}

}  // namespace kornlab
