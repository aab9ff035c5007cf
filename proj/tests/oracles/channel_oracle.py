#!/usr/bin/env python3
# Copyright 2026 The vrcell Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reference channel values frozen into channel_test.cc.

Written against the textbook formulas with mpmath at 50 digits, without
looking at the C++ implementation.
"""
import mpmath as mp

mp.mp.dps = 50
A, B, C, FC = mp.mpf("36.8"), mp.mpf("43.8"), mp.mpf(20), mp.mpf(5)
PT = mp.mpf(1)
W = mp.mpf(180000)
TAU = mp.mpf("0.0005")
NOISE = mp.power(10, (mp.mpf(-174) - 30) / 10) * W


def loss_db(d):
    return A * mp.log10(d) + B + C * mp.log10(FC / 5)


def gain(d):
    return mp.power(10, -loss_db(d) / 10)


def sinr(user, cells, serving, load):
    dist = [mp.sqrt((user[0] - c[0]) ** 2 + (user[1] - c[1]) ** 2) for c in cells]
    signal = PT * gain(dist[serving])
    interference = sum(PT * gain(d) for j, d in enumerate(dist) if j != serving)
    return signal / (NOISE + load * interference)


def rbs(bits, s):
    return int(mp.ceil(mp.mpf(bits) / (TAU * W * mp.log(1 + s, 2))))


def main():
    print("path_loss_db(250) =", mp.nstr(loss_db(250), 17))
    print("noise_w =", mp.nstr(NOISE, 17))
    cells = [(0, 0), (300, 0), (0, 400)]
    user = (100, 50)
    for load in (mp.mpf(1), mp.mpf("0.045")):
        for j in range(3):
            s = sinr(user, cells, j, load)
            print(f"sinr(load={mp.nstr(load, 3)}, cell={j}) =", mp.nstr(s, 17),
                  " rbs(2e6) =", rbs(2e6, s))
    lone = sinr((100, 0), [(0, 0)], 0, mp.mpf(1))
    print("snr(d=100) =", mp.nstr(lone, 17), " rbs(2e6) =", rbs(2e6, lone))
    far = sinr((1000, 0), [(0, 0)], 0, mp.mpf(1))
    print("snr(d=1000) =", mp.nstr(far, 17), " rbs(2e6) =", rbs(2e6, far))
    # Pool interference load for a 50,000 RB/s cell in a 100 MHz system.
    pool = mp.mpf(100e6) / W / TAU
    print("pool_load =", mp.nstr(mp.mpf(50000) / pool, 17))


if __name__ == "__main__":
    main()
