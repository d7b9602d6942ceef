import numpy as np, time, os, sys
import elemdiff.tensor as T
from elemdiff.cli import load_config, model_spec_from_config, _load_dataset
from elemdiff.pipeline import Pipeline
from elemdiff.rng import Rng
from elemdiff.training import TrainConfig, train_stage
from elemdiff.diffusion import q_sample

cfg = load_config("runs/probe.cfg")
spec = model_spec_from_config(cfg)
data = _load_dataset("runs/probe1/data")
targets = np.stack([s.target for s in data[:32]])
z0 = (targets.astype(np.float32) / 127.5 - 1.0).transpose(0, 3, 1, 2)
cls = np.array([s.spec.background for s in data[:32]], dtype=np.int64)
probe_r = Rng(123)

def per_t(pipe):
    out = {}
    with T.no_grad():
        inj = pipe.scene_level_injections(targets)
        for t in (1, 50, 120, 200):
            eps = probe_r.child("e", t).normal(z0.shape, dtype=np.float32)
            z_t = q_sample(z0, np.full(32, t), eps, pipe.schedule)
            eps_hat = pipe.denoiser.predict_noise(z_t, np.full(32, t), c=cls, injections=inj)
            out[t] = float(((eps_hat.data - eps) ** 2).mean())
    return out

for lr in (1e-3, 5e-4):
    tag = f"lr{lr:g}"
    pipe = Pipeline(Rng(11).child("model"), spec)
    ck_path = f"runs/diag4_{tag}.bin"
    prev = None
    for phase in range(6):
        steps = (phase + 1) * 500
        tc = TrainConfig(stage="base", steps=steps, batch_size=16, lr=lr, dropout=0.1, seed=31, log_every=250)
        train_stage(pipe, tc, data, ckpt_out=ck_path, resume_from=prev)
        prev = ck_path
        m = per_t(pipe)
        print(f"{tag} step={steps} " + " ".join(f"t{t}={v:.4f}" for t, v in m.items()), flush=True)
