"""Procedural paired try-on samples with exact ground-truth warp flows.

Scene convention: positions are normalized (x, y) with x in [0,1] spanning
the width and y in [0,1] spanning the height; pixel (i, j) has its center at
((j+0.5)/W, (i+0.5)/H). Warps are stored as the backward map B from target
coordinates to flat-garment coordinates, so the stored flow B(p) - p plugs
straight into bilinear gather warping.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from matplotlib.path import Path as MplPath
from scipy.ndimage import binary_dilation

from .config import ModelConfig
from .data_model import (AgnosticMask, DenseFlow, ImageTensor, PoseKeypoints,
                         SkeletonMap, TryOnSample)

PATTERNS = ("stripes", "checks", "logo_patch", "text_glyphs", "plain")
SILHOUETTES = ("tshirt", "long_sleeve")

MIN_H, MIN_W = 32, 24

# limb id -> (joint a, joint b); one fixed color per limb class
LIMBS = (
    ("head", "neck"),
    ("neck", "l_shoulder"),
    ("neck", "r_shoulder"),
    ("l_shoulder", "l_elbow"),
    ("l_elbow", "l_wrist"),
    ("r_shoulder", "r_elbow"),
    ("r_elbow", "r_wrist"),
    ("neck", "l_hip"),
    ("neck", "r_hip"),
    ("l_hip", "r_hip"),
)

LIMB_COLORS = np.array([
    (0.90, 0.10, 0.10),
    (0.90, 0.55, 0.10),
    (0.85, 0.85, 0.10),
    (0.30, 0.85, 0.15),
    (0.10, 0.80, 0.60),
    (0.10, 0.70, 0.90),
    (0.15, 0.30, 0.90),
    (0.55, 0.15, 0.90),
    (0.90, 0.15, 0.75),
    (0.60, 0.60, 0.60),
], dtype=np.float32)

# 5x7 glyph bitmaps for the text pattern
_GLYPHS = {
    "A": ("01110", "10001", "10001", "11111", "10001", "10001", "10001"),
    "E": ("11111", "10000", "10000", "11110", "10000", "10000", "11111"),
    "F": ("11111", "10000", "10000", "11110", "10000", "10000", "10000"),
    "H": ("10001", "10001", "10001", "11111", "10001", "10001", "10001"),
    "K": ("10001", "10010", "10100", "11000", "10100", "10010", "10001"),
    "L": ("10000", "10000", "10000", "10000", "10000", "10000", "11111"),
    "O": ("01110", "10001", "10001", "10001", "10001", "10001", "01110"),
    "T": ("11111", "00100", "00100", "00100", "00100", "00100", "00100"),
    "X": ("10001", "01010", "00100", "00100", "00100", "01010", "10001"),
    "Z": ("11111", "00001", "00010", "00100", "01000", "10000", "11111"),
}
GLYPH_SET = tuple(sorted(_GLYPHS))


def pixel_centers(size):
    """Normalized (x, y) pixel-center grids of shape [H, W] each."""
    h, w = size
    xs = (np.arange(w, dtype=np.float64) + 0.5) / w
    ys = (np.arange(h, dtype=np.float64) + 0.5) / h
    gx, gy = np.meshgrid(xs, ys)
    return gx, gy


def _polygon_is_simple(verts):
    """O(n^2) proper-intersection test between non-adjacent edges."""
    n = len(verts)

    def seg_intersect(p, q, r, s):
        def cross(o, a, b):
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
        d1, d2 = cross(r, s, p), cross(r, s, q)
        d3, d4 = cross(p, q, r), cross(p, q, s)
        return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))

    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        for j in range(i + 1, n):
            if abs(i - j) in (0, 1) or (i == 0 and j == n - 1):
                continue
            c, d = verts[j], verts[(j + 1) % n]
            if seg_intersect(a, b, c, d):
                return False
    return True


# ---------------------------------------------------------------------------
# thin-plate-spline warp
# ---------------------------------------------------------------------------

def _tps_kernel(r2):
    # phi(r) = r^2 log r, with phi(0) = 0
    out = np.zeros_like(r2)
    nz = r2 > 1e-12
    out[nz] = 0.5 * r2[nz] * np.log(r2[nz])
    return out


class TPSField:
    """2-D displacement field interpolating displacements at control points."""

    def __init__(self, points, displacements):
        points = np.asarray(points, dtype=np.float64)
        disps = np.asarray(displacements, dtype=np.float64)
        n = len(points)
        d2 = ((points[:, None, :] - points[None, :, :]) ** 2).sum(-1)
        K = _tps_kernel(d2)
        P = np.concatenate([np.ones((n, 1)), points], axis=1)
        A = np.zeros((n + 3, n + 3))
        A[:n, :n] = K
        A[:n, n:] = P
        A[n:, :n] = P.T
        rhs = np.zeros((n + 3, 2))
        rhs[:n] = disps
        sol = np.linalg.solve(A, rhs)
        self.points = points
        self.w = sol[:n]
        self.a = sol[n:]

    def __call__(self, pts):
        pts = np.asarray(pts, dtype=np.float64)
        d2 = ((pts[:, None, :] - self.points[None, :, :]) ** 2).sum(-1)
        U = _tps_kernel(d2)
        return U @ self.w + self.a[0] + pts @ self.a[1:]


def tps_grid_points(n=4):
    g = np.linspace(0.0, 1.0, n)
    gx, gy = np.meshgrid(g, g)
    return np.stack([gx.ravel(), gy.ravel()], axis=1)


@dataclass
class WarpSpec:
    """Backward warp: B(p) = affine . [p; 1] + tps(p), target -> flat garment."""
    affine: np.ndarray                 # 2x3 backward matrix
    tps_displacements: np.ndarray      # 16x2 displacements on the 4x4 grid
    magnitude_cap: float = 0.1

    def __post_init__(self):
        self.affine = np.asarray(self.affine, dtype=np.float64).reshape(2, 3)
        self.tps_displacements = np.asarray(self.tps_displacements,
                                            dtype=np.float64).reshape(-1, 2)
        det = np.linalg.det(self.affine[:, :2])
        if not 0.5 <= det <= 2.0:
            raise ValueError(f"affine determinant {det:.3f} outside [0.5, 2.0]")
        mags = np.abs(self.tps_displacements).max() if len(self.tps_displacements) else 0.0
        if mags > self.magnitude_cap + 1e-12:
            raise ValueError(f"tps displacement {mags:.4f} exceeds cap {self.magnitude_cap}")
        self._tps = None
        if np.abs(self.tps_displacements).max() > 0:
            self._tps = TPSField(tps_grid_points(4), self.tps_displacements)

    @classmethod
    def identity(cls):
        return cls(np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]), np.zeros((16, 2)))

    def backward(self, pts):
        pts = np.asarray(pts, dtype=np.float64)
        out = pts @ self.affine[:, :2].T + self.affine[:, 2]
        if self._tps is not None:
            out = out + self._tps(pts)
        return out

    def flow_grid(self, size):
        """Exact normalized flow B(p) - p evaluated at pixel centers of `size`."""
        gx, gy = pixel_centers(size)
        pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
        disp = self.backward(pts) - pts
        return disp.reshape(size[0], size[1], 2).astype(np.float32)


# ---------------------------------------------------------------------------
# garments
# ---------------------------------------------------------------------------

@dataclass
class GarmentSpec:
    base_color: tuple
    pattern: str
    pattern_params: dict
    silhouette: str

    def __post_init__(self):
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}")
        if self.silhouette not in SILHOUETTES:
            raise ValueError(f"unknown silhouette {self.silhouette!r}")
        verts = silhouette_polygon(self.silhouette)
        if not _polygon_is_simple(verts):
            raise ValueError("silhouette polygon self-intersects")
        if self.pattern in ("stripes", "checks"):
            if self.pattern_params.get("frequency", 0) <= 0:
                raise ValueError(f"{self.pattern} needs a positive frequency")
        if self.pattern == "text_glyphs" and not self.pattern_params.get("text"):
            raise ValueError("text_glyphs needs text")


def silhouette_polygon(kind):
    """Canonical flat-garment outline (normalized coords, simple polygon)."""
    if kind == "tshirt":
        sleeve = [(0.84, 0.33), (0.78, 0.42), (0.70, 0.38)]
    else:  # long_sleeve
        sleeve = [(0.90, 0.52), (0.81, 0.56), (0.70, 0.38)]
    right = [(0.60, 0.235), (0.705, 0.26)] + sleeve + [(0.69, 0.44), (0.69, 0.635)]
    left = [(-x + 1.0, y) for x, y in right][::-1]
    return np.array(right + left, dtype=np.float64)


def _hsv_to_rgb(h, s, v):
    i = int(h * 6.0) % 6
    f = h * 6.0 - math.floor(h * 6.0)
    p, q, t = v * (1 - s), v * (1 - f * s), v * (1 - (1 - f) * s)
    return [(v, t, p), (q, v, p), (p, v, t), (p, q, v), (t, p, v), (v, p, q)][i]


def sample_garment_spec(rng):
    hue = rng.uniform(0.0, 1.0)
    base = _hsv_to_rgb(hue, rng.uniform(0.55, 0.9), rng.uniform(0.35, 0.8))
    alt_hue = (hue + rng.uniform(0.35, 0.65)) % 1.0
    alt = _hsv_to_rgb(alt_hue, rng.uniform(0.6, 0.95), rng.uniform(0.55, 0.95))
    pattern = PATTERNS[rng.integers(0, len(PATTERNS))]
    params = {"alt_color": alt}
    if pattern in ("stripes", "checks"):
        params.update(frequency=float(rng.uniform(4.0, 9.0)),
                      phase=float(rng.uniform(0.0, 1.0)),
                      angle=float(rng.uniform(0.0, math.pi)))
    elif pattern == "logo_patch":
        params.update(cx=float(rng.uniform(0.42, 0.58)),
                      cy=float(rng.uniform(0.36, 0.48)),
                      half=float(rng.uniform(0.05, 0.09)))
    elif pattern == "text_glyphs":
        k = int(rng.integers(2, 5))
        letters = [GLYPH_SET[rng.integers(0, len(GLYPH_SET))] for _ in range(k)]
        params.update(text="".join(letters),
                      cy=float(rng.uniform(0.36, 0.50)),
                      scale=float(rng.uniform(0.020, 0.032)))
    silhouette = SILHOUETTES[rng.integers(0, len(SILHOUETTES))]
    return GarmentSpec(tuple(base), pattern, params, silhouette)


def _pattern_field(spec, gx, gy):
    """Boolean field: True where the alt color applies."""
    p = spec.pattern_params
    if spec.pattern == "plain":
        return np.zeros_like(gx, dtype=bool)
    if spec.pattern == "stripes":
        t = gx * math.cos(p["angle"]) + gy * math.sin(p["angle"])
        return np.mod(p["frequency"] * t + p["phase"], 1.0) < 0.5
    if spec.pattern == "checks":
        a, b = math.cos(p["angle"]), math.sin(p["angle"])
        t1 = np.mod(p["frequency"] * (gx * a + gy * b) + p["phase"], 1.0) < 0.5
        t2 = np.mod(p["frequency"] * (-gx * b + gy * a) + p["phase"], 1.0) < 0.5
        return t1 ^ t2
    if spec.pattern == "logo_patch":
        inside = (np.abs(gx - p["cx"]) < p["half"]) & (np.abs(gy - p["cy"]) < p["half"])
        hole = ((gx - p["cx"]) ** 2 + (gy - p["cy"]) ** 2) < (0.45 * p["half"]) ** 2
        return inside & ~hole
    if spec.pattern == "text_glyphs":
        field = np.zeros_like(gx, dtype=bool)
        text, scale, cy = p["text"], p["scale"], p["cy"]
        total_w = len(text) * 6 * scale - scale
        x0 = 0.5 - total_w / 2
        for k, ch in enumerate(text):
            rows = _GLYPHS[ch]
            gx0 = x0 + k * 6 * scale
            for r, row in enumerate(rows):
                for c, bit in enumerate(row):
                    if bit == "1":
                        cell = ((gx >= gx0 + c * scale) & (gx < gx0 + (c + 1) * scale)
                                & (gy >= cy + r * scale) & (gy < cy + (r + 1) * scale))
                        field |= cell
        return field
    raise ValueError(spec.pattern)


GARMENT_BG = (0.94, 0.94, 0.94)


def render_garment(spec, size):
    """Flat garment image: silhouette filled with the pattern on light bg."""
    h, w = size
    gx, gy = pixel_centers(size)
    pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
    poly = MplPath(silhouette_polygon(spec.silhouette))
    inside = poly.contains_points(pts).reshape(h, w)
    alt = _pattern_field(spec, gx, gy)
    img = np.empty((3, h, w), dtype=np.float32)
    base = np.array(spec.base_color, dtype=np.float32)
    altc = np.array(spec.pattern_params.get("alt_color", (1.0, 1.0, 1.0)),
                    dtype=np.float32)
    for c in range(3):
        img[c] = GARMENT_BG[c]
        img[c][inside] = np.where(alt[inside], altc[c], base[c])
    return ImageTensor(np.clip(img, 0.0, 1.0), "unit")


# ---------------------------------------------------------------------------
# body, pose, skeleton
# ---------------------------------------------------------------------------

CANONICAL_POSE = (
    ("head", 0.50, 0.10, True),
    ("neck", 0.50, 0.225, True),
    ("l_shoulder", 0.315, 0.265, True),
    ("r_shoulder", 0.685, 0.265, True),
    ("l_elbow", 0.24, 0.43, True),
    ("r_elbow", 0.76, 0.43, True),
    ("l_wrist", 0.20, 0.58, True),
    ("r_wrist", 0.80, 0.58, True),
    ("l_hip", 0.40, 0.64, True),
    ("r_hip", 0.60, 0.64, True),
)


def canonical_pose():
    return PoseKeypoints([tuple(j) for j in CANONICAL_POSE])


def sample_pose(rng, jitter=0.03):
    joints = []
    shift = rng.uniform(-0.04, 0.04, size=2)
    for name, x, y, vis in CANONICAL_POSE:
        dx, dy = rng.uniform(-jitter, jitter, size=2)
        joints.append((name,
                       float(np.clip(x + shift[0] + dx, 0.02, 0.98)),
                       float(np.clip(y + shift[1] * 0.5 + dy, 0.02, 0.98)),
                       True))
    return PoseKeypoints(joints)


def _capsule_mask(gx, gy, a, b, radius):
    ax, ay = a
    bx, by = b
    vx, vy = bx - ax, by - ay
    denom = vx * vx + vy * vy
    if denom < 1e-12:
        t = np.zeros_like(gx)
    else:
        t = np.clip(((gx - ax) * vx + (gy - ay) * vy) / denom, 0.0, 1.0)
    dx, dy = gx - (ax + t * vx), gy - (ay + t * vy)
    return dx * dx + dy * dy <= radius * radius


SKIN = (0.87, 0.72, 0.60)
PANTS = (0.26, 0.28, 0.38)


def render_body(pose, size, bg_color):
    """Flat-shaded person without garment; painter's order back-to-front."""
    h, w = size
    gx, gy = pixel_centers(size)
    img = np.empty((3, h, w), dtype=np.float32)
    for c in range(3):
        img[c] = bg_color[c]

    def paint(mask, color):
        for c in range(3):
            img[c][mask] = color[c]

    def joint(name):
        x, y, _ = pose.get(name)
        return (x, y)

    lh, rh = joint("l_hip"), joint("r_hip")
    for hip in (lh, rh):
        paint(_capsule_mask(gx, gy, hip, (hip[0], min(hip[1] + 0.33, 0.99)), 0.045), PANTS)
    # torso quad between widened shoulders and hips
    ls, rs = joint("l_shoulder"), joint("r_shoulder")
    torso = MplPath(np.array([
        (ls[0] - 0.02, ls[1] - 0.01), (rs[0] + 0.02, rs[1] - 0.01),
        (rh[0] + 0.055, rh[1] + 0.02), (lh[0] - 0.055, lh[1] + 0.02)]))
    pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
    paint(torso.contains_points(pts).reshape(h, w), SKIN)
    for side in ("l", "r"):
        sh, el, wr = joint(f"{side}_shoulder"), joint(f"{side}_elbow"), joint(f"{side}_wrist")
        paint(_capsule_mask(gx, gy, sh, el, 0.032), SKIN)
        paint(_capsule_mask(gx, gy, el, wr, 0.028), SKIN)
    hd, nk = joint("head"), joint("neck")
    paint(_capsule_mask(gx, gy, hd, nk, 0.026), SKIN)
    ex, ey = gx - hd[0], gy - hd[1]
    paint((ex / 0.055) ** 2 + (ey / 0.075) ** 2 <= 1.0, SKIN)
    return np.clip(img, 0.0, 1.0)


def render_skeleton(pose, size):
    """Deterministic anti-aliased limb rendering, one fixed color per limb."""
    h, w = size
    gx, gy = pixel_centers(size)
    img = np.zeros((3, h, w), dtype=np.float32)
    half_px, aa_px = 0.9, 1.0
    for limb_id, (ja, jb) in enumerate(LIMBS):
        xa, ya, va = pose.get(ja)
        xb, yb, vb = pose.get(jb)
        if not (va and vb):
            continue
        # distances in pixels for a resolution-independent stroke width
        pxa, pya = xa * w, ya * h
        pxb, pyb = xb * w, yb * h
        px, py = gx * w, gy * h
        vx, vy = pxb - pxa, pyb - pya
        denom = vx * vx + vy * vy
        t = np.clip(((px - pxa) * vx + (py - pya) * vy) / max(denom, 1e-12), 0.0, 1.0)
        d = np.sqrt((px - (pxa + t * vx)) ** 2 + (py - (pya + t * vy)) ** 2)
        alpha = np.clip((half_px + aa_px - d) / aa_px, 0.0, 1.0).astype(np.float32)
        for c in range(3):
            img[c] = np.maximum(img[c], alpha * LIMB_COLORS[limb_id, c])
    return SkeletonMap(img)


def _disk_structure(radius=2):
    r = int(radius)
    y, x = np.ogrid[-r:r + 1, -r:r + 1]
    return x * x + y * y <= radius * radius


def derive_agnostic_mask(polygon, size):
    """Binary mask of the polygon plus a 2 px dilation margin."""
    polygon = np.asarray(polygon, dtype=np.float64)
    if polygon.ndim != 2 or len(polygon) < 3:
        raise ValueError("polygon needs at least 3 vertices")
    if polygon.min() < 0.0 or polygon.max() > 1.0:
        raise ValueError("polygon outside the image")
    h, w = size
    gx, gy = pixel_centers(size)
    pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
    inside = MplPath(polygon).contains_points(pts).reshape(h, w)
    dilated = binary_dilation(inside, structure=_disk_structure(2))
    return AgnosticMask(dilated.astype(np.float32)[None])


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

def _bilinear_sample(img, px, py):
    """Gather img[c, py, px] with bilinear weights and zero padding.

    Private sampler: the generator's compositing path stays independent of
    the warp operator the tests check it against.
    """
    c, h, w = img.shape
    x0 = np.floor(px).astype(np.int64)
    y0 = np.floor(py).astype(np.int64)
    fx, fy = px - x0, py - y0
    out = np.zeros((c,) + px.shape, dtype=np.float64)
    for dy in (0, 1):
        for dx in (0, 1):
            xi, yi = x0 + dx, y0 + dy
            wgt = (fx if dx else 1 - fx) * (fy if dy else 1 - fy)
            valid = (xi >= 0) & (xi < w) & (yi >= 0) & (yi < h)
            xi_c, yi_c = np.clip(xi, 0, w - 1), np.clip(yi, 0, h - 1)
            vals = img[:, yi_c, xi_c] * np.where(valid, wgt, 0.0)
            out += vals
    return out.astype(np.float32)


def warp_strength_params(strength=1.0):
    return {
        "translate": 0.035 * strength,
        "rotate": 0.10 * strength,
        "scale": 0.10 * strength,
        "tps": 0.035 * strength,
    }


def sample_warp(rng, pose, strength=1.0):
    """Backward warp coupling the pose offset with extra affine + TPS jitter."""
    p = warp_strength_params(strength)
    ls, rs = pose.get("l_shoulder"), pose.get("r_shoulder")
    c_ls, c_rs = (0.315, 0.265), (0.685, 0.265)
    mid = np.array([(ls[0] + rs[0]) / 2, (ls[1] + rs[1]) / 2])
    mid0 = np.array([(c_ls[0] + c_rs[0]) / 2, (c_ls[1] + c_rs[1]) / 2])
    theta = math.atan2(rs[1] - ls[1], rs[0] - ls[0]) + rng.uniform(-p["rotate"], p["rotate"])
    span = math.hypot(rs[0] - ls[0], rs[1] - ls[1])
    span0 = c_rs[0] - c_ls[0]
    s = float(np.clip((span / span0) * (1.0 + rng.uniform(-p["scale"], p["scale"])),
                      0.72, 1.40))
    extra_t = rng.uniform(-p["translate"], p["translate"], size=2)
    # forward: q = mid + s R(theta) (p - mid0) + extra_t; store the inverse
    ct, st = math.cos(theta), math.sin(theta)
    R_inv = np.array([[ct, st], [-st, ct]]) / s
    t_back = mid0 - R_inv @ (mid + extra_t)
    affine = np.concatenate([R_inv, t_back[:, None]], axis=1)
    tps = rng.uniform(-p["tps"], p["tps"], size=(16, 2))
    return WarpSpec(affine, tps, magnitude_cap=max(p["tps"], 1e-6))


def _person_background(rng):
    tint = rng.uniform(-0.02, 0.02, size=3)
    return tuple(np.clip(np.array([0.93, 0.93, 0.95]) + tint, 0.0, 1.0))


def generate_sample(index, config, seed, strength=1.0):
    """One paired sample; RNG is seed ^ index so parallel == serial."""
    rng = np.random.default_rng(seed ^ index)
    size = tuple(config.image_size)
    h, w = size
    f = config.codec_factor

    garment_spec = sample_garment_spec(rng)
    pose = sample_pose(rng)
    warp = sample_warp(rng, pose, strength=strength)

    garment = render_garment(garment_spec, size)
    body = render_body(pose, size, _person_background(rng))
    skeleton = render_skeleton(pose, size)

    # worn-garment region: pixels whose backward map lands inside the outline
    gx, gy = pixel_centers(size)
    pts = np.stack([gx.ravel(), gy.ravel()], axis=1)
    mapped = warp.backward(pts)
    poly = MplPath(silhouette_polygon(garment_spec.silhouette))
    region = poly.contains_points(mapped).reshape(h, w)
    mask_arr = binary_dilation(region, structure=_disk_structure(2))
    mask = AgnosticMask(mask_arr.astype(np.float32)[None])

    # composite the warped garment over the mask region using the exact flow
    flow_img = warp.flow_grid(size)                       # [H, W, 2] analytic
    px = (gx + flow_img[..., 0]) * w - 0.5
    py = (gy + flow_img[..., 1]) * h - 0.5
    warped = _bilinear_sample(garment.data.astype(np.float64), px, py)
    target_arr = body.copy()
    m = mask_arr[None]
    target_arr = np.where(m, warped, target_arr)
    target = ImageTensor(np.clip(target_arr, 0.0, 1.0), "unit")

    flow_lat = warp.flow_grid((h // f, w // f))
    flow_gt = DenseFlow(np.clip(flow_lat, -2.0, 2.0))

    return TryOnSample(
        person=target, garment=garment, mask=mask, skeleton=skeleton,
        flow_gt=flow_gt, target=target, sample_id=f"s{index:05d}",
    )


def generate_dataset(n, config, seed, strength=1.0):
    """n paired samples, deterministic given seed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    h, w = config.image_size
    if h < MIN_H or w < MIN_W:
        raise ValueError(
            f"image size {h}x{w} below minimum {MIN_H}x{MIN_W}: patterns unresolvable")
    return [generate_sample(i, config, seed, strength=strength) for i in range(n)]


def make_unpaired(samples, shift=1):
    """Pair garment_i with person_j (i != j); targets are absent."""
    n = len(samples)
    if n < 2:
        raise ValueError("need at least 2 samples for unpaired pairing")
    shift = shift % n or 1
    out = []
    for j, s in enumerate(samples):
        i = (j + shift) % n
        out.append(TryOnSample(
            person=s.person, garment=samples[i].garment, mask=s.mask,
            skeleton=s.skeleton, flow_gt=s.flow_gt, target=None,
            sample_id=f"{s.sample_id}_wearing_{samples[i].sample_id}",
        ))
    return out
