// Copyright 2026 The Sevscore Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/gen_wada_table.py; see that script for the model.

#include "wada_table.h"

namespace sevscore::internal {

const std::array<double, kWadaTableSize> kWadaTable = {
    0.4094347001,  // -20 dB
    0.4094594951,  // -19 dB
    0.4094976159,  // -18 dB
    0.4095558462,  // -17 dB
    0.4096441248,  // -16 dB
    0.4097767964,  // -15 dB
    0.4099742173,  // -14 dB
    0.4102647321,  // -13 dB
    0.4106869919,  // -12 dB
    0.4112925105,  // -11 dB
    0.4121482693,  // -10 dB
    0.4133390805,  // -9 dB
    0.4149693352,  // -8 dB
    0.4171637095,  // -7 dB
    0.4200664006,  // -6 dB
    0.4238385494,  // -5 dB
    0.4286536564,  // -4 dB
    0.4346910274,  // -3 dB
    0.4421275524,  // -2 dB
    0.4511283862,  // -1 dB
    0.4618373168,  // 0 dB
    0.4743677270,  // 1 dB
    0.4887950449,  // 2 dB
    0.5051514392,  // 3 dB
    0.5234232581,  // 4 dB
    0.5435513826,  // 5 dB
    0.5654343372,  // 6 dB
    0.5889337041,  // 7 dB
    0.6138811987,  // 8 dB
    0.6400866703,  // 9 dB
    0.6673463166,  // 10 dB
    0.6954504984,  // 11 dB
    0.7241906980,  // 12 dB
    0.7533653321,  // 13 dB
    0.7827842904,  // 14 dB
    0.8122722026,  // 15 dB
    0.8416705313,  // 16 dB
    0.8708386493,  // 17 dB
    0.8996540835,  // 18 dB
    0.9280121162,  // 19 dB
    0.9558249181,  // 20 dB
    0.9830203661,  // 21 dB
    1.0095406741,  // 22 dB
    1.0353409352,  // 23 dB
    1.0603876535,  // 24 dB
    1.0846573165,  // 25 dB
    1.1081350478,  // 26 dB
    1.1308133600,  // 27 dB
    1.1526910213,  // 28 dB
    1.1737720382,  // 29 dB
    1.1940647546,  // 30 dB
    1.2135810600,  // 31 dB
    1.2323357016,  // 32 dB
    1.2503456886,  // 33 dB
    1.2676297830,  // 34 dB
    1.2842080642,  // 35 dB
    1.3001015612,  // 36 dB
    1.3153319429,  // 37 dB
    1.3299212591,  // 38 dB
    1.3438917248,  // 39 dB
    1.3572655434,  // 40 dB
    1.3700647613,  // 41 dB
    1.3823111502,  // 42 dB
    1.3940261133,  // 43 dB
    1.4052306105,  // 44 dB
    1.4159451014,  // 45 dB
    1.4261895013,  // 46 dB
    1.4359831494,  // 47 dB
    1.4453447871,  // 48 dB
    1.4542925439,  // 49 dB
    1.4628439302,  // 50 dB
    1.4710158359,  // 51 dB
    1.4788245329,  // 52 dB
    1.4862856817,  // 53 dB
    1.4934143410,  // 54 dB
    1.5002249790,  // 55 dB
    1.5067314871,  // 56 dB
    1.5129471947,  // 57 dB
    1.5188848849,  // 58 dB
    1.5245568111,  // 59 dB
    1.5299747142,  // 60 dB
    1.5351498394,  // 61 dB
    1.5400929541,  // 62 dB
    1.5448143648,  // 63 dB
    1.5493239343,  // 64 dB
    1.5536310991,  // 65 dB
    1.5577448852,  // 66 dB
    1.5616739253,  // 67 dB
    1.5654264737,  // 68 dB
    1.5690104227,  // 69 dB
    1.5724333166,  // 70 dB
    1.5757023670,  // 71 dB
    1.5788244664,  // 72 dB
    1.5818062016,  // 73 dB
    1.5846538674,  // 74 dB
    1.5873734782,  // 75 dB
    1.5899707810,  // 76 dB
    1.5924512664,  // 77 dB
    1.5948201801,  // 78 dB
    1.5970825333,  // 79 dB
    1.5992431135,  // 80 dB
    1.6013064938,  // 81 dB
    1.6032770426,  // 82 dB
    1.6051589326,  // 83 dB
    1.6069561497,  // 84 dB
    1.6086725008,  // 85 dB
    1.6103116222,  // 86 dB
    1.6118769871,  // 87 dB
    1.6133719125,  // 88 dB
    1.6147995668,  // 89 dB
    1.6161629760,  // 90 dB
    1.6174650301,  // 91 dB
    1.6187084893,  // 92 dB
    1.6198959896,  // 93 dB
    1.6210300488,  // 94 dB
    1.6221130714,  // 95 dB
    1.6231473537,  // 96 dB
    1.6241350888,  // 97 dB
    1.6250783712,  // 98 dB
    1.6259792012,  // 99 dB
    1.6268394892,  // 100 dB
};

}  // namespace sevscore::internal
