#!/usr/bin/env python3
"""Print a summary of a synthesized pulse program and its gate fidelity"""
import math
import sys
from pathlib import Path

root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))

from app.constants import Protocol
from app.gatesim.fidelity import ideal_lab_gate
from app.gatesim.scans import final_fidelity
from app.synthesis.phase import preset_target
from app.synthesis.program import design_program


def view_program(gate: str, k: int, protocol: str = Protocol.CHRW):
    target = preset_target(gate)
    program = design_program(protocol, target, k * math.pi)
    print(f"🎛️  {gate} / {protocol} at T = {k} pi/omega ({program.n_samples} samples)")
    print("=" * 60)
    print(f"Lambda:        {target.lam:.6f}")
    print(f"peak Omega0:   {program.omega0.max():.6f}")
    print(f"peak Omega1:   {abs(program.omega1).max():.6f}")
    print(f"max Z:         {program.z.max():.6f}")
    print(f"omega_q range: [{program.omega_q.min():.6f}, {program.omega_q.max():.6f}]")
    print("\nTarget gate (lab frame):")
    print(ideal_lab_gate(program).round(6))
    print(f"\n📊 F(T) = {final_fidelity(protocol, gate, k):.10f}")


if __name__ == "__main__":
    if len(sys.argv) < 3:
        print("Usage: python scripts/view_program.py GATE K [PROTOCOL]")
        sys.exit(2)
    view_program(sys.argv[1], int(sys.argv[2]), *(sys.argv[3:4]))
