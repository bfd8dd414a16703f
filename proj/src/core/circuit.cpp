#include "core/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace sqdw {

void run_circuit(const CircuitDesc& c, Statevector& sv) {
  require(sv.n_qubits() == c.n_qubits, ErrorKind::invalid_argument,
          "statevector size does not match circuit");
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::x:
        sv.apply_x(g.q0);
        break;
      case Gate::Kind::r: {
        const cxd m[4] = {g.block(0, 0), g.block(0, 1), g.block(1, 0),
                          g.block(1, 1)};
        sv.apply_1q(g.q0, m);
        break;
      }
      case Gate::Kind::phase1q:
        sv.apply_phase(g.q0, g.phase);
        break;
      case Gate::Kind::cx:
        sv.apply_cx(g.q0, g.q1);
        break;
      case Gate::Kind::cz:
        sv.apply_cz(g.q0, g.q1);
        break;
      case Gate::Kind::cp: {
        // diag(1,1,1,e^{i angle})
        const std::uint64_t mask = (1ull << g.q0) | (1ull << g.q1);
        const cxd ph(std::cos(g.angle), std::sin(g.angle));
        auto& amps = sv.amps();
        for (std::uint64_t i = 0; i < amps.size(); ++i)
          if ((i & mask) == mask) amps[i] *= ph;
        break;
      }
      case Gate::Kind::givens:
        sv.apply_two_mode_block(g.q0, g.block);
        break;
      case Gate::Kind::mcry:
        sv.apply_controlled_ry(g.controls, g.control_pol, g.q0, g.angle);
        break;
    }
  }
}

int cz_equivalents(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::cx:
      return 1;
    case Gate::Kind::cz:
      return 1;
    case Gate::Kind::cp:
      return 2;
    case Gate::Kind::givens:
      return 2;
    case Gate::Kind::mcry:
      switch (g.controls.size()) {
        case 1: return 2;
        case 2: return 8;   // CRy(theta/2) pair + two Toffolis
        default: return 20; // three controls (recursive lowering)
      }
    default:
      return 0;
  }
}

namespace {

// single-qubit R count of the lowering of one gate
int r_equivalents(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::x:
    case Gate::Kind::r:
    case Gate::Kind::phase1q:
      return 1;
    case Gate::Kind::cx:
      return 2;  // H on target both sides
    case Gate::Kind::cz:
      return 0;
    case Gate::Kind::cp:
      return 5;
    case Gate::Kind::givens:
      return 6;
    case Gate::Kind::mcry:
      switch (g.controls.size()) {
        case 1: return 6;
        case 2: return 20;
        default: return 44;
      }
    default:
      return 0;
  }
}

}  // namespace

ResourceReport estimate_resources(const CircuitDesc& c, int n_params) {
  ResourceReport rep;
  rep.n_qubits = c.n_qubits;
  rep.n_params = n_params;

  // lowered stream of (is_two_qubit, qubits) ops with per-qubit R merging
  struct Op {
    bool two;
    int a, b;
  };
  std::vector<Op> stream;
  // merge uninterrupted runs of single-qubit rotations on the same qubit
  enum class Last { none, rot, two };
  std::vector<Last> last_touch(c.n_qubits, Last::none);

  auto push_r = [&](int q) {
    if (last_touch[q] == Last::rot) return;
    stream.push_back({false, q, -1});
    last_touch[q] = Last::rot;
  };
  auto push_cz = [&](int a, int b) {
    stream.push_back({true, a, b});
    last_touch[a] = last_touch[b] = Last::two;
  };

  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::x:
      case Gate::Kind::r:
      case Gate::Kind::phase1q:
        push_r(g.q0);
        break;
      case Gate::Kind::cz:
        push_cz(g.q0, g.q1);
        break;
      case Gate::Kind::cx:
        push_r(g.q1);
        push_cz(g.q0, g.q1);
        push_r(g.q1);
        break;
      case Gate::Kind::cp:
        push_r(g.q0);
        push_r(g.q1);
        push_cz(g.q0, g.q1);
        push_r(g.q1);
        push_cz(g.q0, g.q1);
        push_r(g.q1);
        break;
      case Gate::Kind::givens:
        push_r(g.q0);
        push_r(g.q0 + 1);
        push_cz(g.q0, g.q0 + 1);
        push_r(g.q0);
        push_r(g.q0 + 1);
        push_cz(g.q0, g.q0 + 1);
        push_r(g.q0);
        push_r(g.q0 + 1);
        break;
      case Gate::Kind::mcry: {
        // recursive ladder lowering; distribute CZs over (target, controls)
        const int ncz = cz_equivalents(g);
        const int nr = r_equivalents(g);
        for (int k = 0; k < std::max(ncz, nr); ++k) {
          if (k < nr) push_r(g.q0);
          if (k < ncz)
            push_cz(g.q0, g.controls[k % g.controls.size()]);
        }
        break;
      }
    }
  }

  // counts
  for (const Op& op : stream) {
    if (op.two)
      ++rep.cz;
    else
      ++rep.r;
  }
  rep.total_1q = rep.r;

  // star-topology MOVE lowering: consecutive CZs can keep the shuttled
  // operand in the resonator only if nothing touched it in between (a parked
  // qubit cannot receive single-qubit gates)
  int occupant = -1;
  bool occupant_touched = false;
  long merges = 0;
  for (const Op& op : stream) {
    if (!op.two) {
      if (op.a == occupant) occupant_touched = true;
      continue;
    }
    if (!occupant_touched && (occupant == op.a || occupant == op.b)) {
      ++merges;
    } else {
      occupant = op.a;
    }
    occupant_touched = false;
  }
  rep.move = 2 * rep.cz - 2 * merges;
  rep.total_2q = rep.cz + rep.move;
  rep.total = rep.total_1q + rep.total_2q;

  // ASAP depth over qubits + the shared resonator; MOVE ops serialize on it
  std::vector<long> qt(c.n_qubits, 0);
  long rt = 0;  // resonator time
  occupant = -1;
  for (const Op& op : stream) {
    if (!op.two) {
      qt[op.a] += 1;
      continue;
    }
    const int moved = (occupant == op.a || occupant == op.b)
                          ? occupant
                          : op.a;
    const int other = (moved == op.a) ? op.b : op.a;
    long t = std::max({qt[moved], qt[other], rt});
    if (occupant != moved) {
      // move in (possibly after moving the previous occupant out)
      if (occupant >= 0) {
        long tout = std::max(qt[occupant], rt) + 1;
        qt[occupant] = tout;
        rt = tout;
        t = std::max(t, tout);
      }
      t = std::max({qt[moved], rt}) + 1;  // move-in tick
      qt[moved] = t;
      rt = t;
      occupant = moved;
    }
    const long tcz = std::max({qt[moved], qt[other], rt}) + 1;
    qt[moved] = qt[other] = rt = tcz;
  }
  long depth = rt;
  for (long t : qt) depth = std::max(depth, t);
  rep.depth = depth;
  return rep;
}

}  // namespace sqdw
