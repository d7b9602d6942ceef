import numpy as np, os, sys
sys.path.insert(0, "src")
import elemdiff.evalharness as ev
from elemdiff.cli import load_config, model_spec_from_config
from elemdiff.pipeline import Pipeline
from elemdiff.rng import Rng
from elemdiff.raster import write_ppm
from elemdiff.scenes import BACKGROUND_PALETTE, ELEMENT_PALETTE

cfg = load_config("runs/probe.cfg")
spec = model_spec_from_config(cfg)
scenes = ev.heldout_scenes(4, 1000)
kinds = [["mask"] * len(s.elements) for s in scenes]
cls = np.array([s.spec.background for s in scenes], dtype=np.int64)

os.makedirs("runs/diag1", exist_ok=True)
pal = np.array(BACKGROUND_PALETTE + ELEMENT_PALETTE, dtype=np.float64)

def describe(tag, imgs):
    for i, img in enumerate(imgs):
        tgt = scenes[i].target
        lab = np.argmin(((img[..., None, :].astype(np.float64) - pal) ** 2).sum(-1), axis=-1)
        lab_t = np.argmin(((tgt[..., None, :].astype(np.float64) - pal) ** 2).sum(-1), axis=-1)
        hist = np.bincount(lab.ravel(), minlength=10)
        hist_t = np.bincount(lab_t.ravel(), minlength=10)
        print(f"{tag}[{i}] mean={img.mean():6.1f} std={img.std():5.1f}  palette hist gen={hist.tolist()} tgt={hist_t.tolist()}")
        write_ppm(f"runs/diag1/{tag}_{i}.ppm", img)
        write_ppm(f"runs/diag1/target_{i}.ppm", tgt)

# full pipeline from the inter checkpoint
pipe = Pipeline(Rng(0).child("model"), spec)
pipe.load("runs/probe1/inter.bin")
imgs = pipe.sample_scenes(scenes, kinds, cls, Rng(5).child("d"))
describe("inter", imgs)

# denoiser alone from the base checkpoint, driven by ground-truth
# scene-level encoder injections (its training-time conditioning)
pipe_b = Pipeline(Rng(0).child("model"), spec)
pipe_b.load("runs/probe1/base.bin")
import elemdiff.tensor as T
from elemdiff.diffusion import ddpm_sample
targets = np.stack([s.target for s in scenes])
with T.no_grad():
    inj = pipe_b.scene_level_injections(targets)
    emb = pipe_b.denoiser.time_class_embedding
    r = Rng(6).child("d2")
    def eps_fn(z_t, t):
        return pipe_b.denoiser.predict_noise(z_t, t, c=cls, injections=inj)
    x = ddpm_sample(eps_fn, (len(scenes), 3, spec.canvas, spec.canvas), pipe_b.schedule, r)
imgs_b = (np.clip((x.transpose(0, 2, 3, 1) + 1) * 127.5, 0, 255) + 0.5).astype(np.uint8)
describe("base_gt", imgs_b)
