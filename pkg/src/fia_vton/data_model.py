"""Shared domain types, their invariants, and dataset (de)serialization.

All array-carrying types are plain dataclasses over float32 numpy arrays.
They validate on construction and are treated as immutable afterwards, so
instances are safe to share across threads.
"""

import json
import os
import struct
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from PIL import Image

FLOW_MAGIC = b"FIAFLOW1"
JOINT_NAMES = (
    "head", "neck",
    "l_shoulder", "r_shoulder",
    "l_elbow", "r_elbow",
    "l_wrist", "r_wrist",
    "l_hip", "r_hip",
)


def _as_f32(a):
    a = np.asarray(a, dtype=np.float32)
    return a


@dataclass
class ImageTensor:
    """[C, H, W] image with a declared value range tag ('unit' or 'signed')."""
    data: np.ndarray
    value_range: str = "unit"

    def __post_init__(self):
        self.data = _as_f32(self.data)
        if self.data.ndim != 3:
            raise ValueError(f"image must be [C,H,W], got shape {self.data.shape}")
        c, h, w = self.data.shape
        if h < 8 or w < 8:
            raise ValueError(f"image sides must be >= 8, got {h}x{w}")
        if self.value_range == "unit":
            lo, hi = 0.0, 1.0
        elif self.value_range == "signed":
            lo, hi = -1.0, 1.0
        else:
            raise ValueError(f"unknown value_range {self.value_range!r}")
        if not np.isfinite(self.data).all():
            raise ValueError("image contains non-finite values")
        if self.data.min() < lo or self.data.max() > hi:
            raise ValueError(
                f"values outside declared {self.value_range} range "
                f"[{self.data.min():.4f}, {self.data.max():.4f}]")

    @property
    def shape(self):
        return self.data.shape

    def to_signed(self):
        if self.value_range == "signed":
            return self
        return ImageTensor(self.data * 2.0 - 1.0, "signed")

    def to_unit(self):
        if self.value_range == "unit":
            return self
        return ImageTensor(np.clip((self.data + 1.0) / 2.0, 0.0, 1.0), "unit")


@dataclass
class DenseFlow:
    """[h, w, 2] backward warp flow; channel 0 = dx along width, 1 = dy along
    height, in normalized units where 1.0 spans the full image side."""
    data: np.ndarray

    def __post_init__(self):
        self.data = _as_f32(self.data)
        if self.data.ndim != 3 or self.data.shape[2] != 2:
            raise ValueError(f"flow must be [h,w,2], got shape {self.data.shape}")
        if not np.isfinite(self.data).all():
            raise ValueError("flow contains non-finite values")
        if np.abs(self.data).max() > 2.0:
            raise ValueError(
                f"flow displacement exceeds sanity bound 2.0: {np.abs(self.data).max():.4f}")

    @property
    def shape(self):
        return self.data.shape


@dataclass
class AgnosticMask:
    """[1, H, W] binary mask; 1 marks the region to inpaint."""
    data: np.ndarray

    def __post_init__(self):
        self.data = _as_f32(self.data)
        if self.data.ndim != 3 or self.data.shape[0] != 1:
            raise ValueError(f"mask must be [1,H,W], got shape {self.data.shape}")
        if not np.isin(self.data, (0.0, 1.0)).all():
            raise ValueError("mask not binary")
        frac = float(self.data.mean())
        if frac < 0.01:
            raise ValueError(f"mask foreground below 1% ({frac:.4%})")

    @property
    def shape(self):
        return self.data.shape


@dataclass
class SkeletonMap:
    """[3, H, W] unit-range rendering of limb segments, one color per limb."""
    data: np.ndarray

    def __post_init__(self):
        self.data = _as_f32(self.data)
        if self.data.ndim != 3 or self.data.shape[0] != 3:
            raise ValueError(f"skeleton must be [3,H,W], got shape {self.data.shape}")
        if self.data.min() < 0.0 or self.data.max() > 1.0:
            raise ValueError("skeleton values outside unit range")

    @property
    def shape(self):
        return self.data.shape


@dataclass
class PoseKeypoints:
    """Named joints in normalized image coordinates (x right, y down)."""
    joints: list  # of (name, x, y, visible)

    def __post_init__(self):
        names = [j[0] for j in self.joints]
        if len(set(names)) != len(names):
            raise ValueError("duplicate joint names")
        unknown = set(names) - set(JOINT_NAMES)
        if unknown:
            raise ValueError(f"unknown joints: {sorted(unknown)}")
        for name, x, y, vis in self.joints:
            if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                raise ValueError(f"joint {name} outside [0,1]: ({x}, {y})")

    def get(self, name):
        for n, x, y, vis in self.joints:
            if n == name:
                return (x, y, vis)
        raise KeyError(name)

    def moved(self, names, dx=0.0, dy=0.0):
        moved = []
        for n, x, y, vis in self.joints:
            if n in names:
                x, y = min(max(x + dx, 0.0), 1.0), min(max(y + dy, 0.0), 1.0)
            moved.append((n, x, y, vis))
        return PoseKeypoints(moved)


@dataclass
class TryOnSample:
    person: ImageTensor
    garment: ImageTensor
    mask: AgnosticMask
    skeleton: SkeletonMap
    flow_gt: Optional[DenseFlow]
    target: Optional[ImageTensor]
    sample_id: str

    @property
    def paired(self):
        return self.target is not None


def validate_sample(sample, config):
    """Re-check every invariant; returns a list of violation strings (empty = valid).

    Never raises: a corrupted but constructible sample yields descriptions.
    """
    v = []
    h_img, w_img = config.image_size
    f = config.codec_factor

    def check_image(img, name):
        if img.data.ndim != 3:
            v.append(f"{name} not [C,H,W]")
            return
        if not np.isfinite(img.data).all():
            v.append(f"{name} contains non-finite values")
        lo, hi = (0.0, 1.0) if img.value_range == "unit" else (-1.0, 1.0)
        if img.data.min() < lo or img.data.max() > hi:
            v.append(f"{name} values outside declared range")
        _, h, w = img.data.shape
        if h < 8 or w < 8:
            v.append(f"{name} sides below 8")
        if h % f or w % f:
            v.append(f"{name} size not divisible by codec factor {f}")

    check_image(sample.person, "person")
    check_image(sample.garment, "garment")
    if sample.person.data.shape != (3, h_img, w_img):
        v.append("person shape mismatch")
    if sample.garment.data.shape != (3, h_img, w_img):
        v.append("garment shape mismatch")
    if sample.target is not None:
        check_image(sample.target, "target")
        if sample.target.data.shape != sample.person.data.shape:
            v.append("person/target dimension mismatch")

    if sample.mask.data.shape != (1, h_img, w_img):
        v.append("mask shape mismatch")
    if not np.isin(sample.mask.data, (0.0, 1.0)).all():
        v.append("mask not binary")
    elif sample.mask.data.mean() < 0.01:
        v.append("mask foreground below 1%")

    if sample.skeleton.data.shape != (3, h_img, w_img):
        v.append("skeleton shape mismatch")
    if sample.skeleton.data.min() < 0.0 or sample.skeleton.data.max() > 1.0:
        v.append("skeleton values outside unit range")

    if sample.flow_gt is not None:
        if sample.flow_gt.data.shape != (h_img // f, w_img // f, 2):
            v.append("flow_gt shape mismatch")
        if not np.isfinite(sample.flow_gt.data).all():
            v.append("flow_gt contains non-finite values")
        elif np.abs(sample.flow_gt.data).max() > 2.0:
            v.append("flow_gt displacement exceeds bound 2.0")
    return v


# ---------------------------------------------------------------------------
# serialization: <root>/<split>/{person,garment,mask,skeleton,flow,target}/<id>
# ---------------------------------------------------------------------------

def save_image_png(img, path):
    a = img.to_unit().data
    a8 = np.rint(a * 255.0).astype(np.uint8)
    Image.fromarray(np.transpose(a8, (1, 2, 0)), mode="RGB").save(path)


def load_image_png(path):
    with Image.open(path) as im:
        a8 = np.asarray(im.convert("RGB"), dtype=np.uint8)
    return ImageTensor(np.transpose(a8, (2, 0, 1)).astype(np.float32) / 255.0, "unit")


def save_mask_png(mask, path):
    a8 = (mask.data[0] * 255.0).astype(np.uint8)
    Image.fromarray(a8, mode="L").save(path)


def load_mask_png(path):
    with Image.open(path) as im:
        a8 = np.asarray(im.convert("L"), dtype=np.uint8)
    return AgnosticMask((a8 >= 128).astype(np.float32)[None])


def save_flow(flow, path):
    h, w, _ = flow.data.shape
    with open(path, "wb") as fh:
        fh.write(FLOW_MAGIC)
        fh.write(struct.pack("<II", h, w))
        fh.write(flow.data.astype("<f4").tobytes())


def load_flow(path):
    with open(path, "rb") as fh:
        magic = fh.read(8)
        if magic != FLOW_MAGIC:
            raise ValueError(f"bad flow magic {magic!r} in {path}")
        h, w = struct.unpack("<II", fh.read(8))
        data = np.frombuffer(fh.read(h * w * 2 * 4), dtype="<f4").reshape(h, w, 2)
    return DenseFlow(data.copy())


SAMPLE_PARTS = ("person", "garment", "mask", "skeleton", "flow", "target")


def save_dataset(samples, root, split="train", generator_params=None):
    """Write samples to the directory layout plus a manifest JSON."""
    base = os.path.join(root, split)
    for part in SAMPLE_PARTS:
        os.makedirs(os.path.join(base, part), exist_ok=True)
    ids = []
    for s in samples:
        sid = s.sample_id
        ids.append(sid)
        save_image_png(s.person, os.path.join(base, "person", f"{sid}.png"))
        save_image_png(s.garment, os.path.join(base, "garment", f"{sid}.png"))
        save_mask_png(s.mask, os.path.join(base, "mask", f"{sid}.png"))
        save_image_png(ImageTensor(s.skeleton.data, "unit"),
                       os.path.join(base, "skeleton", f"{sid}.png"))
        if s.flow_gt is not None:
            save_flow(s.flow_gt, os.path.join(base, "flow", f"{sid}.flo"))
        if s.target is not None:
            save_image_png(s.target, os.path.join(base, "target", f"{sid}.png"))
    manifest = {
        "split": split,
        "sample_ids": ids,
        "generator_params": generator_params or {},
    }
    with open(os.path.join(base, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
    return manifest


def load_dataset(root, split="train"):
    base = os.path.join(root, split)
    manifest_path = os.path.join(base, "manifest.json")
    if not os.path.exists(manifest_path):
        raise FileNotFoundError(f"no manifest at {manifest_path}")
    with open(manifest_path) as fh:
        manifest = json.load(fh)
    samples = []
    for sid in manifest["sample_ids"]:
        flow_path = os.path.join(base, "flow", f"{sid}.flo")
        target_path = os.path.join(base, "target", f"{sid}.png")
        skel = load_image_png(os.path.join(base, "skeleton", f"{sid}.png"))
        samples.append(TryOnSample(
            person=load_image_png(os.path.join(base, "person", f"{sid}.png")),
            garment=load_image_png(os.path.join(base, "garment", f"{sid}.png")),
            mask=load_mask_png(os.path.join(base, "mask", f"{sid}.png")),
            skeleton=SkeletonMap(skel.data),
            flow_gt=load_flow(flow_path) if os.path.exists(flow_path) else None,
            target=load_image_png(target_path) if os.path.exists(target_path) else None,
            sample_id=sid,
        ))
    return samples, manifest
