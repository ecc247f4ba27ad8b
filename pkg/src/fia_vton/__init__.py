"""Flow-infused attention try-on: latent diffusion with warp-aware guidance."""

__version__ = "0.1.0"

from .config import ModelConfig, profile_config, load_config

__all__ = ["ModelConfig", "profile_config", "load_config", "__version__"]
