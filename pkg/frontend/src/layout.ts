// Deterministic force-directed layout with persistent positions: known
// vertices keep their coordinates as starting points between mutations
// so the picture stays stable while arrows change.

export interface Point {
  x: number;
  y: number;
}

export class Layout {
  private positions = new Map<number, Point>();

  constructor(
    private width = 640,
    private height = 480,
  ) {}

  position(v: number): Point {
    const p = this.positions.get(v);
    if (p) return p;
    // deterministic placement on a spiral around the center
    const angle = v * 2.399963; // golden angle
    const radius = 40 + 24 * Math.sqrt(v + 1);
    const fresh = {
      x: this.width / 2 + radius * Math.cos(angle),
      y: this.height / 2 + radius * Math.sin(angle),
    };
    this.positions.set(v, fresh);
    return fresh;
  }

  /** Relax spring/repulsion forces; existing positions are the starting
   * configuration, which keeps the mental map across mutations. */
  relax(n: number, arrows: [number, number][], iterations = 120): void {
    const pts: Point[] = [];
    for (let v = 0; v < n; v++) pts.push({ ...this.position(v) });
    const ideal = 110;
    for (let it = 0; it < iterations; it++) {
      const fx = new Array(n).fill(0);
      const fy = new Array(n).fill(0);
      for (let i = 0; i < n; i++) {
        for (let j = i + 1; j < n; j++) {
          let dx = pts[i].x - pts[j].x;
          let dy = pts[i].y - pts[j].y;
          let d2 = dx * dx + dy * dy;
          if (d2 < 1) d2 = 1;
          const rep = (ideal * ideal) / d2;
          const d = Math.sqrt(d2);
          fx[i] += (dx / d) * rep;
          fy[i] += (dy / d) * rep;
          fx[j] -= (dx / d) * rep;
          fy[j] -= (dy / d) * rep;
        }
      }
      for (const [a, b] of arrows) {
        const dx = pts[b].x - pts[a].x;
        const dy = pts[b].y - pts[a].y;
        const d = Math.max(1, Math.sqrt(dx * dx + dy * dy));
        const pull = (d - ideal) * 0.08;
        fx[a] += (dx / d) * pull;
        fy[a] += (dy / d) * pull;
        fx[b] -= (dx / d) * pull;
        fy[b] -= (dy / d) * pull;
      }
      const step = 0.85 * (1 - it / iterations) + 0.05;
      for (let v = 0; v < n; v++) {
        pts[v].x += Math.max(-12, Math.min(12, fx[v] * step));
        pts[v].y += Math.max(-12, Math.min(12, fy[v] * step));
        pts[v].x = Math.max(24, Math.min(this.width - 24, pts[v].x));
        pts[v].y = Math.max(24, Math.min(this.height - 24, pts[v].y));
      }
    }
    for (let v = 0; v < n; v++) this.positions.set(v, pts[v]);
  }

  forget(above: number): void {
    for (const key of [...this.positions.keys()]) {
      if (key >= above) this.positions.delete(key);
    }
  }
}
