//! Embedded known-answer vectors and the self-check run by `tdes verify`.
//!
//! Single-DES vectors cover the variable-plaintext and variable-key sweeps
//! under the all-parity key, a worked key-schedule example and random keys.
//! Triple-DES vectors cover all three keying options. All values were
//! produced by an independent bit-string implementation and cross-checked
//! against OpenSSL before being frozen here.

use std::fmt;

use crate::des::{self, key_schedule, Block, DesKey};
use crate::ecb::{Batch, DispatchConfig, Engine};
use crate::tdes::{tdes_decrypt_block, tdes_encrypt_block, triple_schedule, TripleKey};

#[derive(Clone, Copy, Debug)]
pub struct DesVector {
    pub key: u64,
    pub plaintext: u64,
    pub ciphertext: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct TdesVector {
    /// 48, 32 or 16 hex characters.
    pub key: &'static str,
    pub plaintext: u64,
    pub ciphertext: u64,
}

pub const DES_VECTORS: &[DesVector] = &[
    DesVector {
        key: 0x133457799BBCDFF1,
        plaintext: 0x0123456789ABCDEF,
        ciphertext: 0x85E813540F0AB405,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x8000000000000000,
        ciphertext: 0x95F8A5E5DD31D900,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x4000000000000000,
        ciphertext: 0xDD7F121CA5015619,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x2000000000000000,
        ciphertext: 0x2E8653104F3834EA,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x1000000000000000,
        ciphertext: 0x4BD388FF6CD81D4F,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0800000000000000,
        ciphertext: 0x20B9E767B2FB1456,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0400000000000000,
        ciphertext: 0x55579380D77138EF,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0200000000000000,
        ciphertext: 0x6CC5DEFAAF04512F,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0100000000000000,
        ciphertext: 0x0D9F279BA5D87260,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0080000000000000,
        ciphertext: 0xD9031B0271BD5A0A,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0040000000000000,
        ciphertext: 0x424250B37C3DD951,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0020000000000000,
        ciphertext: 0xB8061B7ECD9A21E5,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0010000000000000,
        ciphertext: 0xF15D0F286B65BD28,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0008000000000000,
        ciphertext: 0xADD0CC8D6E5DEBA1,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0004000000000000,
        ciphertext: 0xE6D5F82752AD63D1,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0002000000000000,
        ciphertext: 0xECBFE3BD3F591A5E,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0001000000000000,
        ciphertext: 0xF356834379D165CD,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000800000000000,
        ciphertext: 0x2B9F982F20037FA9,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000400000000000,
        ciphertext: 0x889DE068A16F0BE6,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000200000000000,
        ciphertext: 0xE19E275D846A1298,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000100000000000,
        ciphertext: 0x329A8ED523D71AEC,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000080000000000,
        ciphertext: 0xE7FCE22557D23C97,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000040000000000,
        ciphertext: 0x12A9F5817FF2D65D,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000020000000000,
        ciphertext: 0xA484C3AD38DC9C19,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000010000000000,
        ciphertext: 0xFBE00A8A1EF8AD72,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000008000000000,
        ciphertext: 0x750D079407521363,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000004000000000,
        ciphertext: 0x64FEED9C724C2FAF,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000002000000000,
        ciphertext: 0xF02B263B328E2B60,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000001000000000,
        ciphertext: 0x9D64555A9A10B852,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000800000000,
        ciphertext: 0xD106FF0BED5255D7,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000400000000,
        ciphertext: 0xE1652C6B138C64A5,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000200000000,
        ciphertext: 0xE428581186EC8F46,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000100000000,
        ciphertext: 0xAEB5F5EDE22D1A36,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000080000000,
        ciphertext: 0xE943D7568AEC0C5C,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000040000000,
        ciphertext: 0xDF98C8276F54B04B,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000020000000,
        ciphertext: 0xB160E4680F6C696F,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000010000000,
        ciphertext: 0xFA0752B07D9C4AB8,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000008000000,
        ciphertext: 0xCA3A2B036DBC8502,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000004000000,
        ciphertext: 0x5E0905517BB59BCF,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000002000000,
        ciphertext: 0x814EEB3B91D90726,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000001000000,
        ciphertext: 0x4D49DB1532919C9F,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000800000,
        ciphertext: 0x25EB5FC3F8CF0621,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000400000,
        ciphertext: 0xAB6A20C0620D1C6F,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000200000,
        ciphertext: 0x79E90DBC98F92CCA,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000100000,
        ciphertext: 0x866ECEDD8072BB0E,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000080000,
        ciphertext: 0x8B54536F2F3E64A8,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000040000,
        ciphertext: 0xEA51D3975595B86B,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000020000,
        ciphertext: 0xCAFFC6AC4542DE31,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000010000,
        ciphertext: 0x8DD45A2DDF90796C,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000008000,
        ciphertext: 0x1029D55E880EC2D0,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000004000,
        ciphertext: 0x5D86CB23639DBEA9,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000002000,
        ciphertext: 0x1D1CA853AE7C0C5F,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000001000,
        ciphertext: 0xCE332329248F3228,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000800,
        ciphertext: 0x8405D1ABE24FB942,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000400,
        ciphertext: 0xE643D78090CA4207,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000200,
        ciphertext: 0x48221B9937748A23,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000100,
        ciphertext: 0xDD7C0BBD61FAFD54,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000080,
        ciphertext: 0x2FBC291A570DB5C4,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000040,
        ciphertext: 0xE07C30D7E4E26E12,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000020,
        ciphertext: 0x0953E2258E8E90A1,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000010,
        ciphertext: 0x5B711BC4CEEBF2EE,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000008,
        ciphertext: 0xCC083F1E6D9E85F6,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000004,
        ciphertext: 0xD2FD8867D50D2DFE,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000002,
        ciphertext: 0x06E7EA22CE92708F,
    },
    DesVector {
        key: 0x0101010101010101,
        plaintext: 0x0000000000000001,
        ciphertext: 0x166B40B44ABA4BD6,
    },
    DesVector {
        key: 0x8101010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x95A8D72813DAA94D,
    },
    DesVector {
        key: 0x4101010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x0EEC1487DD8C26D5,
    },
    DesVector {
        key: 0x2101010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x7AD16FFB79C45926,
    },
    DesVector {
        key: 0x1101010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xD3746294CA6A6CF3,
    },
    DesVector {
        key: 0x0901010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x809F5F873C1FD761,
    },
    DesVector {
        key: 0x0501010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xC02FAFFEC989D1FC,
    },
    DesVector {
        key: 0x0301010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x4615AA1D33E72F10,
    },
    DesVector {
        key: 0x0181010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x2055123350C00858,
    },
    DesVector {
        key: 0x0141010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xDF3B99D6577397C8,
    },
    DesVector {
        key: 0x0121010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x31FE17369B5288C9,
    },
    DesVector {
        key: 0x0111010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xDFDD3CC64DAE1642,
    },
    DesVector {
        key: 0x0109010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x178C83CE2B399D94,
    },
    DesVector {
        key: 0x0105010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x50F636324A9B7F80,
    },
    DesVector {
        key: 0x0103010101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xA8468EE3BC18F06D,
    },
    DesVector {
        key: 0x0101810101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xA2DC9E92FD3CDE92,
    },
    DesVector {
        key: 0x0101410101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xCAC09F797D031287,
    },
    DesVector {
        key: 0x0101210101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x90BA680B22AEB525,
    },
    DesVector {
        key: 0x0101110101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xCE7A24F350E280B6,
    },
    DesVector {
        key: 0x0101090101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x882BFF0AA01A0B87,
    },
    DesVector {
        key: 0x0101050101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x25610288924511C2,
    },
    DesVector {
        key: 0x0101030101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xC71516C29C75D170,
    },
    DesVector {
        key: 0x0101018101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x5199C29A52C9F059,
    },
    DesVector {
        key: 0x0101014101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xC22F0A294A71F29F,
    },
    DesVector {
        key: 0x0101012101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xEE371483714C02EA,
    },
    DesVector {
        key: 0x0101011101010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xA81FBD448F9E522F,
    },
    DesVector {
        key: 0x0101010901010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x4F644C92E192DFED,
    },
    DesVector {
        key: 0x0101010501010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x1AFA9A66A6DF92AE,
    },
    DesVector {
        key: 0x0101010301010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xB3C1CC715CB879D8,
    },
    DesVector {
        key: 0x0101010181010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x19D032E64AB0BD8B,
    },
    DesVector {
        key: 0x0101010141010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x3CFAA7A7DC8720DC,
    },
    DesVector {
        key: 0x0101010121010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xB7265F7F447AC6F3,
    },
    DesVector {
        key: 0x0101010111010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x9DB73B3C0D163F54,
    },
    DesVector {
        key: 0x0101010109010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x8181B65BABF4A975,
    },
    DesVector {
        key: 0x0101010105010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x93C9B64042EAA240,
    },
    DesVector {
        key: 0x0101010103010101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x5570530829705592,
    },
    DesVector {
        key: 0x0101010101810101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x8638809E878787A0,
    },
    DesVector {
        key: 0x0101010101410101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x41B9A79AF79AC208,
    },
    DesVector {
        key: 0x0101010101210101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x7A9BE42F2009A892,
    },
    DesVector {
        key: 0x0101010101110101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x29038D56BA6D2745,
    },
    DesVector {
        key: 0x0101010101090101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x5495C6ABF1E5DF51,
    },
    DesVector {
        key: 0x0101010101050101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xAE13DBD561488933,
    },
    DesVector {
        key: 0x0101010101030101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x024D1FFA8904E389,
    },
    DesVector {
        key: 0x0101010101018101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xD1399712F99BF02E,
    },
    DesVector {
        key: 0x0101010101014101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x14C1D7C1CFFEC79E,
    },
    DesVector {
        key: 0x0101010101012101,
        plaintext: 0x0000000000000000,
        ciphertext: 0x1DE5279DAE3BED6F,
    },
    DesVector {
        key: 0x0101010101011101,
        plaintext: 0x0000000000000000,
        ciphertext: 0xE941A33F85501303,
    },
    DesVector {
        key: 0x0101010101010901,
        plaintext: 0x0000000000000000,
        ciphertext: 0xDA99DBBC9A03F379,
    },
    DesVector {
        key: 0x0101010101010501,
        plaintext: 0x0000000000000000,
        ciphertext: 0xB7FC92F91D8E92E9,
    },
    DesVector {
        key: 0x0101010101010301,
        plaintext: 0x0000000000000000,
        ciphertext: 0xAE8E5CAA3CA04E85,
    },
    DesVector {
        key: 0x0101010101010181,
        plaintext: 0x0000000000000000,
        ciphertext: 0x9CC62DF43B6EED74,
    },
    DesVector {
        key: 0x0101010101010141,
        plaintext: 0x0000000000000000,
        ciphertext: 0xD863DBB5C59A91A0,
    },
    DesVector {
        key: 0x0101010101010121,
        plaintext: 0x0000000000000000,
        ciphertext: 0xA1AB2190545B91D7,
    },
    DesVector {
        key: 0x0101010101010111,
        plaintext: 0x0000000000000000,
        ciphertext: 0x0875041E64C570F7,
    },
    DesVector {
        key: 0x0101010101010109,
        plaintext: 0x0000000000000000,
        ciphertext: 0x5A594528BEBEF1CC,
    },
    DesVector {
        key: 0x0101010101010105,
        plaintext: 0x0000000000000000,
        ciphertext: 0xFCDB3291DE21F0C0,
    },
    DesVector {
        key: 0x0101010101010103,
        plaintext: 0x0000000000000000,
        ciphertext: 0x869EFD7F9F265A09,
    },
    DesVector {
        key: 0x4B05FE2E7FDEF775,
        plaintext: 0x78687859C13BAF29,
        ciphertext: 0x245DBC9925170487,
    },
    DesVector {
        key: 0x5932753937AB215E,
        plaintext: 0x5E4EAF21530F618B,
        ciphertext: 0x8766867729B81E1C,
    },
    DesVector {
        key: 0x5E49D84165A2C0E2,
        plaintext: 0x7C44C290BE5B1715,
        ciphertext: 0x814FFBF4EAE8FBA6,
    },
    DesVector {
        key: 0xBD13EC6B0510961D,
        plaintext: 0x7797DDEC4B8641E1,
        ciphertext: 0x12F9C3FBCB8AF6BE,
    },
    DesVector {
        key: 0x4B8C1344119BECE6,
        plaintext: 0x4A16F4EF9C52BACB,
        ciphertext: 0x30B89B58AA07B85C,
    },
    DesVector {
        key: 0x7C10D202506555E1,
        plaintext: 0x0EE2CFAC4105283A,
        ciphertext: 0x40975D3D178440EA,
    },
    DesVector {
        key: 0xD826EDBE6BCD3397,
        plaintext: 0xD00330FF5D6D67BA,
        ciphertext: 0x1D6AA95D95B74952,
    },
    DesVector {
        key: 0x4E3750440DB007D9,
        plaintext: 0x5321E37163711DC4,
        ciphertext: 0x1EEFC89E5C056C78,
    },
    DesVector {
        key: 0xA92056A23565C308,
        plaintext: 0x3412F498CDEC5040,
        ciphertext: 0x7CF78C3102F0A265,
    },
    DesVector {
        key: 0x5DFCC8A6C6936EE1,
        plaintext: 0x854F256488D991FD,
        ciphertext: 0x242937A11437B65D,
    },
    DesVector {
        key: 0xFD8F0A42E3530246,
        plaintext: 0x82F233E83C3C8C0C,
        ciphertext: 0xB2ABF73B518919F2,
    },
    DesVector {
        key: 0xAF048A53FFD8BE41,
        plaintext: 0x322897A7A8FFFB44,
        ciphertext: 0xC5EFEDAABA0609F7,
    },
    DesVector {
        key: 0xC8E829262FA46EA6,
        plaintext: 0x46D07B9E362454B5,
        ciphertext: 0x23AB543A5C6578D8,
    },
    DesVector {
        key: 0x24332D0A1490B0AA,
        plaintext: 0x01F617FED789D848,
        ciphertext: 0x0A9447A39962B04D,
    },
    DesVector {
        key: 0x5502374358AB62CE,
        plaintext: 0x7252A671E280B4BE,
        ciphertext: 0x237E08A8544AF763,
    },
    DesVector {
        key: 0xB8A1BAA0F7924BD9,
        plaintext: 0xCAD5A0DCDE6129AF,
        ciphertext: 0x87428B2DE9B8C7F8,
    },
];

pub const TDES_VECTORS: &[TdesVector] = &[
    TdesVector {
        key: "0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123",
        plaintext: 0x5468652071756663,
        ciphertext: 0xA826FD8CE53B855F,
    },
    TdesVector {
        key: "0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123",
        plaintext: 0x6B2062726F776E20,
        ciphertext: 0xCCE21C8112256FE6,
    },
    TdesVector {
        key: "0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123",
        plaintext: 0x666F78206A756D70,
        ciphertext: 0x68D5C05DD9B6B900,
    },
    TdesVector {
        key: "83AC6E50E71F1A5310B73464B96542C73504C321BC8171CB",
        plaintext: 0xEB8B06917C64D6F4,
        ciphertext: 0xB9E772C607AA772E,
    },
    TdesVector {
        key: "7B46F9F82829CD5A797B67A5214080586ACE950B12528B9D",
        plaintext: 0x346A3A296683DEFC,
        ciphertext: 0xEBF2BAA16AEE99A0,
    },
    TdesVector {
        key: "3D8048D293EE320D15E8FB5E2CBA5FE7F3AEA07E498EDDC2",
        plaintext: 0x47D97E4F6464127E,
        ciphertext: 0xB01433DADFB0566E,
    },
    TdesVector {
        key: "E0CCA16C93E525D6D5FED15FB3C8733AFEB2448AB56ADAF5",
        plaintext: 0x36FBEECD8C777384,
        ciphertext: 0x9F087268810052EE,
    },
    TdesVector {
        key: "947B10D39A7448CAC8CF3AD36AF80385",
        plaintext: 0xFDE96ADA90CB7461,
        ciphertext: 0xA3FA5161186CF279,
    },
    TdesVector {
        key: "B4D6E811DDE25E8824BF9B9DEC3467A3",
        plaintext: 0x63B6E851248878A8,
        ciphertext: 0xD2BE49C48B40F18E,
    },
    TdesVector {
        key: "861C5E75E2B51612B81690B38701BED8",
        plaintext: 0x2CDBB523C3E58A51,
        ciphertext: 0x91580FF58B82457C,
    },
    TdesVector {
        key: "DE10157AA665C79E4B75174670914B42",
        plaintext: 0x8EA3643D5DE90B2A,
        ciphertext: 0x6C3282D6DB0586BB,
    },
    TdesVector {
        key: "58736270CFF4779F",
        plaintext: 0xF81336614FA2DC76,
        ciphertext: 0x492ADF03DA0943EC,
    },
    TdesVector {
        key: "A9FC480C6D9057C1",
        plaintext: 0xACCAAA659915B69D,
        ciphertext: 0xCA03C49946179033,
    },
    TdesVector {
        key: "0CDD8EBE5CB0D5B3",
        plaintext: 0x2ACDFE8CA593A1E0,
        ciphertext: 0x7093E391CBACB03A,
    },
    TdesVector {
        key: "4D1E68193C8A85F7",
        plaintext: 0x8C7A6B72BC9D19BD,
        ciphertext: 0x56BB522BE621896A,
    },
];

/// Outcome of [`verify_all`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} checks, {} failures",
            self.checks,
            self.failures.len()
        )
    }
}

/// Runs every embedded vector through the reference path, the fused kernel
/// and the threaded engine, plus round-trip and complementation checks.
pub fn verify_all() -> VerifyReport {
    let mut report = VerifyReport::default();

    for v in DES_VECTORS {
        let ks = key_schedule(DesKey::new(v.key));
        let pass = des::fused::fuse_pass(&ks);
        let (pt, ct) = (Block(v.plaintext), Block(v.ciphertext));
        report.check(des::encrypt_block(pt, &ks) == ct, || {
            format!("DES encrypt {:016X}/{:016X}", v.key, v.plaintext)
        });
        report.check(des::decrypt_block(ct, &ks) == pt, || {
            format!("DES decrypt {:016X}/{:016X}", v.key, v.ciphertext)
        });
        report.check(des::fused::encrypt_block(pt, &pass) == ct, || {
            format!("fused DES encrypt {:016X}", v.key)
        });
        report.check(des::fused::decrypt_block(ct, &pass) == pt, || {
            format!("fused DES decrypt {:016X}", v.key)
        });
        // complementation: E_~k(~p) = ~E_k(p)
        let nks = key_schedule(DesKey::new(!v.key));
        report.check(
            des::encrypt_block(Block(!v.plaintext), &nks) == Block(!v.ciphertext),
            || format!("complementation {:016X}", v.key),
        );
    }

    let engine = Engine::new(
        DispatchConfig::threaded(2)
            .with_chunk_blocks(2)
            .with_work_group(1),
    );
    for v in TDES_VECTORS {
        let key = match TripleKey::from_hex(v.key) {
            Ok(k) => k,
            Err(e) => {
                report.check(false, || format!("TDES key {}: {e}", v.key));
                continue;
            }
        };
        let ts = triple_schedule(&key);
        let (pt, ct) = (Block(v.plaintext), Block(v.ciphertext));
        report.check(tdes_encrypt_block(pt, &ts) == ct, || {
            format!("TDES encrypt {}", v.key)
        });
        report.check(tdes_decrypt_block(ct, &ts) == pt, || {
            format!("TDES decrypt {}", v.key)
        });
        report.check(ts.encrypt_fused(pt) == ct, || {
            format!("fused TDES encrypt {}", v.key)
        });
        report.check(ts.decrypt_fused(ct) == pt, || {
            format!("fused TDES decrypt {}", v.key)
        });
        if let Ok(engine) = &engine {
            let batch = Batch::new(vec![pt, pt, pt]);
            let out = engine.encrypt_batch(&batch, &ts);
            report.check(out.blocks == vec![ct; 3], || {
                format!("threaded batch {}", v.key)
            });
        }
    }
    report.check(engine.is_ok(), || {
        "threaded engine failed to start".to_string()
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_embedded_vectors_pass() {
        let r = verify_all();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checks > 5 * DES_VECTORS.len());
    }

    #[test]
    fn fixture_counts() {
        // walkthrough + 64 variable-plaintext + 56 variable-key + 16 random
        assert_eq!(DES_VECTORS.len(), 137);
        assert_eq!(TDES_VECTORS.len(), 15);
    }
}
