"""Model / training configuration and the built-in profiles."""

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field

CODEC_KINDS = ("identity", "tiny_ae")
FLOW_SOURCES = ("oracle", "learned", "zero")
SPATIAL_SOURCES = ("toy", "external", "none")
VARIANTS = ("fia", "no_flow", "no_spatial", "concat_input", "plain_cross_attention")

# Site ids follow the UNet layout: downN sits after the N-th down-level's
# resblock, "mid" in the bottleneck. Resolution divisor per site below.
SITE_LEVELS = {"down0": 0, "down1": 1, "down2": 2, "mid": 2, "up2": 2, "up1": 1, "up0": 0}


@dataclass
class ModelConfig:
    profile: str = "desk"
    image_size: tuple = (64, 48)          # (H, W)
    codec: str = "identity"
    codec_factor: int = 1                 # f in {1, 2, 8}
    latent_channels: int = 3              # c_z
    unet_widths: tuple = (32, 64, 128)
    attention_sites: tuple = ("down1", "down2", "mid")
    head_count: int = 4
    spatial_token_dim: int = 64           # d_s of the spatial guider tokens
    spatial_patch_size: int = 8
    spatial_depth: int = 2
    spatial_positional: bool = True
    flow_source: str = "oracle"
    spatial_source: str = "toy"
    variant: str = "fia"
    time_embed_dim: int = 64
    # DDPM schedule
    train_timesteps: int = 1000
    beta_start: float = 1e-4
    beta_end: float = 2e-2
    sample_steps: int = 50
    # optimization
    learning_rate: float = 1e-4
    batch_size: int = 16
    train_steps: int = 5000
    weight_decay: float = 1e-2
    log_every: int = 20
    checkpoint_every: int = 500
    seed: int = 0

    def __post_init__(self):
        if isinstance(self.image_size, list):
            self.image_size = tuple(self.image_size)
        if isinstance(self.unet_widths, list):
            self.unet_widths = tuple(self.unet_widths)
        if isinstance(self.attention_sites, list):
            self.attention_sites = tuple(self.attention_sites)
        self.validate()

    @property
    def latent_size(self):
        h, w = self.image_size
        return (h // self.codec_factor, w // self.codec_factor)

    @property
    def depth(self):
        # number of 2x downsamples inside the UNet
        return len(self.unet_widths) - 1

    def site_width(self, site):
        return self.unet_widths[SITE_LEVELS[site]]

    def validate(self):
        h, w = self.image_size
        if self.codec not in CODEC_KINDS:
            raise ValueError(f"unknown codec {self.codec!r}")
        if self.codec_factor not in (1, 2, 8):
            raise ValueError(f"codec_factor must be 1, 2 or 8, got {self.codec_factor}")
        if self.codec == "identity" and self.codec_factor != 1:
            raise ValueError("identity codec requires codec_factor 1")
        divisor = self.codec_factor * (2 ** self.depth)
        if h % divisor or w % divisor:
            raise ValueError(
                f"image size {h}x{w} not divisible by codec_factor*2^depth = {divisor}")
        if h < 8 or w < 8:
            raise ValueError("image sides must be >= 8")
        for site in self.attention_sites:
            if site not in SITE_LEVELS:
                raise ValueError(f"unknown attention site {site!r}")
            if SITE_LEVELS[site] >= len(self.unet_widths):
                raise ValueError(f"site {site!r} deeper than unet_widths allows")
            if self.site_width(site) % self.head_count:
                raise ValueError(
                    f"site {site!r} width {self.site_width(site)} not divisible by "
                    f"head_count {self.head_count}")
        if self.spatial_token_dim % self.head_count:
            raise ValueError("spatial_token_dim not divisible by head_count")
        if self.flow_source not in FLOW_SOURCES:
            raise ValueError(f"unknown flow_source {self.flow_source!r}")
        if self.spatial_source not in SPATIAL_SOURCES:
            raise ValueError(f"unknown spatial_source {self.spatial_source!r}")
        if self.variant not in VARIANTS:
            raise ValueError(
                f"unknown variant {self.variant!r}; valid: {', '.join(VARIANTS)}")
        if self.variant not in ("no_spatial", "plain_cross_attention") \
                and self.spatial_source == "none":
            raise ValueError(f"variant {self.variant!r} needs a spatial source")
        if not 0 < self.beta_start < self.beta_end < 1:
            raise ValueError("need 0 < beta_start < beta_end < 1")
        if self.train_timesteps < 1:
            raise ValueError("train_timesteps must be >= 1")

    def to_dict(self):
        d = dataclasses.asdict(self)
        d["image_size"] = list(self.image_size)
        d["unet_widths"] = list(self.unet_widths)
        d["attention_sites"] = list(self.attention_sites)
        return d

    @classmethod
    def from_dict(cls, d):
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)

    def replace(self, **kw):
        return dataclasses.replace(self, **kw)

    def content_hash(self):
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def profile_config(profile, **overrides):
    """Build a config from a named profile plus flat overrides."""
    if profile == "desk":
        base = dict(
            profile="desk",
            image_size=(64, 48),
            codec="tiny_ae", codec_factor=2, latent_channels=4,
            unet_widths=(32, 64, 128),
            learning_rate=1e-4, batch_size=16, train_steps=5000,
        )
    elif profile == "paper":
        # full-scale defaults as reported; not runnable at desk scale
        base = dict(
            profile="paper",
            image_size=(512, 384),
            codec="tiny_ae", codec_factor=8, latent_channels=4,
            unet_widths=(320, 640, 1280),
            head_count=8,
            flow_source="learned",
            learning_rate=1e-5, batch_size=64, train_steps=100_000,
        )
    else:
        raise ValueError(f"unknown profile {profile!r} (expected 'desk' or 'paper')")
    base.update(overrides)
    return ModelConfig(**base)


def load_config(path, **overrides):
    """Load a flat JSON config file; a 'profile' key selects the defaults."""
    with open(path) as fh:
        data = json.load(fh)
    profile = data.pop("profile", "desk")
    data.update(overrides)
    return profile_config(profile, **data)
