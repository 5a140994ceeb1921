#pragma once
// Reference table rows transcribed from the published tables, embedded so the
// verification suites work without access to the data files. The same rows
// live in tests/data/*.json; a unit test keeps the two copies identical.

namespace trigsum::golden {

inline constexpr const char* kCosecantRefJson = R"json(
{
 "family": "cosecant",
 "var": "rho",
 "rows": [
  {
   "k": 0,
   "content": "1",
   "lowest_power": 0,
   "ints": [
    "1"
   ],
   "authoritative": true
  },
  {
   "k": 1,
   "content": "1/6",
   "lowest_power": 1,
   "ints": [
    "1"
   ],
   "authoritative": true
  },
  {
   "k": 2,
   "content": "1/360",
   "lowest_power": 1,
   "ints": [
    "2",
    "5"
   ],
   "authoritative": true
  },
  {
   "k": 3,
   "content": "1/45360",
   "lowest_power": 1,
   "ints": [
    "16",
    "42",
    "35"
   ],
   "authoritative": true
  },
  {
   "k": 4,
   "content": "1/5443200",
   "lowest_power": 1,
   "ints": [
    "144",
    "404",
    "420",
    "175"
   ],
   "authoritative": true
  },
  {
   "k": 5,
   "content": "1/359251200",
   "lowest_power": 1,
   "ints": [
    "768",
    "2288",
    "2684",
    "1540",
    "385"
   ],
   "authoritative": true
  },
  {
   "k": 6,
   "content": "1/5884534656000",
   "lowest_power": 1,
   "ints": [
    "1061376",
    "3327594",
    "4252248",
    "2862860",
    "1051050",
    "175175"
   ],
   "authoritative": true
  },
  {
   "k": 7,
   "content": "1/35307207936000",
   "lowest_power": 1,
   "ints": [
    "552960",
    "1810176",
    "2471456",
    "1849848",
    "820820",
    "210210",
    "25025"
   ],
   "authoritative": true
  },
  {
   "k": 8,
   "content": "1/144053408378880000",
   "lowest_power": 1,
   "ints": [
    "200005632",
    "679395072",
    "978649472",
    "792548432",
    "397517120",
    "125925800",
    "23823800",
    "2127125"
   ],
   "authoritative": true
  },
  {
   "k": 9,
   "content": "1/1034591578977116160000",
   "lowest_power": 1,
   "ints": [
    "129369047040",
    "453757851648",
    "683526873856",
    "589153364352",
    "323159810064",
    "117327450240",
    "27973905960",
    "4073869800",
    "282907625"
   ],
   "authoritative": true
  },
  {
   "k": 10,
   "content": "1/3414152210624483328000000",
   "lowest_power": 1,
   "ints": [
    "38930128699392",
    "140441050828800",
    "219792161825280",
    "199416835425280",
    "117302530691808",
    "47005085727600",
    "12995644662000",
    "2422012593000",
    "280078548750",
    "15559919375"
   ],
   "authoritative": true
  },
  {
   "k": 11,
   "content": "1/471153005066178699264000000",
   "lowest_power": 1,
   "ints": [
    "494848416153600",
    "1830317979303936",
    "2961137042841600",
    "2805729689044480",
    "1747214980192000",
    "755817391389984",
    "232489541684400",
    "50749166067600",
    "7607466867000",
    "715756291250",
    "32534376875"
   ],
   "authoritative": true
  },
  {
   "k": 12,
   "content": "1/15434972445968014187888640000000",
   "lowest_power": 1,
   "ints": [
    "1505662706987827200",
    "5695207005856038912",
    "9487372599204065280",
    "9332354263294766080",
    "6096633539052376320",
    "2806128331871953088",
    "937291839756592320",
    "229239926321406000",
    "40598842049766000",
    "5005999501002500",
    "390802935022500",
    "14803141478125"
   ],
   "authoritative": true
  },
  {
   "k": 13,
   "content": "1/92609834675808085127331840000000",
   "lowest_power": 1,
   "ints": [
    "844922884529848320",
    "3261358271400247296",
    "5576528334428209152",
    "5668465199488266240",
    "3858582205451484160",
    "1870620248833400064",
    "667822651436228288",
    "178292330746770240",
    "35600276746834800",
    "5225593531158000",
    "539680243602500",
    "35527539547500",
    "1138703190625"
   ],
   "authoritative": false
  },
  {
   "k": 14,
   "content": "1/161141112335906068121557401600000000",
   "lowest_power": 1,
   "ints": [
    "138319015041155727360",
    "543855095595477762048",
    "952027796641042464768",
    "996352286992030556160",
    "703040965960031795200",
    "356312537387839432192",
    "134466795172062184832",
    "38526945410311117760",
    "8436987713444690400",
    "1404048942958662000",
    "173777038440005000",
    "15258232341852500",
    "858582205731250",
    "23587423234375"
   ],
   "authoritative": false
  },
  {
   "k": 15,
   "content": "1/6923589032624540122910835317145600000000",
   "lowest_power": 1,
   "ints": [
    "562009739464769840087040",
    "2247511941596311764074496",
    "4019108379306905439830016",
    "4317745925208072594259968",
    "3145163776677939429416960",
    "1656917203539032341530624",
    "655643919364420586023424",
    "199227919419039256217472",
    "46995751664475880185920",
    "8614026107092938211680",
    "1214778349162323946000",
    "128587452922193265000",
    "9720180867524627500",
    "472946705787806250",
    "11260635852090625"
   ],
   "authoritative": false
  }
 ]
}
)json";

inline constexpr const char* kHalfAngleRefJson = R"json(
{
 "family": "gf_R",
 "var": "msq",
 "rows": [
  {
   "v": 1,
   "zeta_ratio": "2",
   "ints": [
    "1"
   ]
  },
  {
   "v": 2,
   "zeta_ratio": "2",
   "ints": [
    "7",
    "2"
   ]
  },
  {
   "v": 3,
   "zeta_ratio": "1",
   "ints": [
    "71",
    "29",
    "8"
   ]
  },
  {
   "v": 4,
   "zeta_ratio": "2/3",
   "ints": [
    "521",
    "251",
    "104",
    "24"
   ]
  },
  {
   "v": 5,
   "zeta_ratio": "1",
   "ints": [
    "1693",
    "901",
    "450",
    "164",
    "32"
   ]
  },
  {
   "v": 6,
   "zeta_ratio": "1/691",
   "ints": [
    "5710469",
    "3253469",
    "1815032",
    "821182",
    "262624",
    "44224"
   ]
  },
  {
   "v": 7,
   "zeta_ratio": "1/30",
   "ints": [
    "1212457",
    "726457",
    "436531",
    "224891",
    "91472",
    "25952",
    "3840"
   ]
  },
  {
   "v": 8,
   "zeta_ratio": "2/10851",
   "ints": [
    "1074010337",
    "669172337",
    "424359179",
    "238674979",
    "112425856",
    "41352256",
    "10528128",
    "1388928"
   ]
  },
  {
   "v": 9,
   "zeta_ratio": "1/219335",
   "ints": [
    "212920335247",
    "136906047247",
    "90463687339",
    "54230674609",
    "28237533526",
    "12198655216",
    "4088714368",
    "943572928",
    "112299520"
   ]
  },
  {
   "v": 10,
   "zeta_ratio": "1/3666831",
   "ints": [
    "17471801743019",
    "11530685023019",
    "7871509097999",
    "4954255382249",
    "2775847146014",
    "1339874175764",
    "533660885024",
    "164177309024",
    "34637202944",
    "3754834944"
   ]
  },
  {
   "v": 11,
   "zeta_ratio": "1/2330490",
   "ints": [
    "54543344015461",
    "36797151215461",
    "25796160434461",
    "16874095108441",
    "10001178676906",
    "5238677224486",
    "2352811821856",
    "868592118736",
    "246835895296",
    "47953445376",
    "4772843520"
   ]
  },
  {
   "v": 12,
   "zeta_ratio": "1/3545461365",
   "ints": [
    "407813841938063843",
    "280376888294063843",
    "200956537702208843",
    "135642820502091743",
    "84063888200850398",
    "46897459147087298",
    "23026002351214568",
    "9661082872248968",
    "3322054926238208",
    "876937263364608",
    "157850700656640",
    "14522209751040"
   ]
  },
  {
   "v": 13,
   "zeta_ratio": "1/82899306",
   "ints": [
    "46885126608855949",
    "32769033282135949",
    "23932490769301549",
    "16581373742311501",
    "10657001539527466",
    "6251551315383406",
    "3288926574739816",
    "1518316248517036",
    "597409832798656",
    "192183289614336",
    "47355550989312",
    "7940215990272",
    "679111114752"
   ]
  },
  {
   "v": 14,
   "zeta_ratio": "1/6785560294",
   "ints": [
    "18876870638218467389",
    "13386158464071267389",
    "9936028183278303389",
    "7037937839930870909",
    "4662484330428335720",
    "2849737068204025620",
    "1584446206207320450",
    "787977205890303150",
    "343067669320476480",
    "127034728547601280",
    "38382891063494656",
    "8866606540512256",
    "1391299071164416",
    "111174619856896"
   ]
  },
  {
   "v": 15,
   "zeta_ratio": "1/6892673020804",
   "ints": [
    "94347422281763617652599",
    "67773208432462419572599",
    "51020868251978707090999",
    "36832275607229172708727",
    "25034877087339771576013",
    "15834856690259096336845",
    "9212522702209442756325",
    "4863979571266245490245",
    "2292234370375168188000",
    "943898600252928069440",
    "329986597479890425856",
    "93975868433656203776",
    "20429529466374004736",
    "3012284194329018368",
    "225859109545705472"
   ]
  }
 ]
}
)json";

inline constexpr const char* kFullCircleRefJson = R"json(
{
 "family": "dowker_T",
 "var": "msq",
 "rows": [
  {
   "v": 1,
   "zeta_ratio": "2",
   "ints": [
    "1"
   ]
  },
  {
   "v": 2,
   "zeta_ratio": "2",
   "ints": [
    "11",
    "1"
   ]
  },
  {
   "v": 3,
   "zeta_ratio": "1",
   "ints": [
    "191",
    "23",
    "2"
   ]
  },
  {
   "v": 4,
   "zeta_ratio": "2/3",
   "ints": [
    "2497",
    "337",
    "43",
    "3"
   ]
  },
  {
   "v": 5,
   "zeta_ratio": "1",
   "ints": [
    "14797",
    "2125",
    "321",
    "35",
    "2"
   ]
  },
  {
   "v": 6,
   "zeta_ratio": "1/691",
   "ints": [
    "92427157",
    "13803157",
    "2295661",
    "307961",
    "28682",
    "1382"
   ]
  },
  {
   "v": 7,
   "zeta_ratio": "1/30",
   "ints": [
    "36740617",
    "5636617",
    "997801",
    "151241",
    "17822",
    "1442",
    "60"
   ]
  },
  {
   "v": 8,
   "zeta_ratio": "2/10851",
   "ints": [
    "61430943169",
    "9611679169",
    "1777658113",
    "292184513",
    "39686267",
    "4149467",
    "296451",
    "10851"
   ]
  },
  {
   "v": 9,
   "zeta_ratio": "1/219335",
   "ints": [
    "23133945892303",
    "3674288164303",
    "701977130191",
    "122248926511",
    "18276362179",
    "2237483869",
    "209998657",
    "13427317",
    "438670"
   ]
  },
  {
   "v": 10,
   "zeta_ratio": "1/3666831",
   "ints": [
    "3624331198599787",
    "582479437959787",
    "114104919557227",
    "20752800653227",
    "3325534763347",
    "453588822847",
    "50482177477",
    "4296730477",
    "248602162",
    "7333662"
   ]
  },
  {
   "v": 11,
   "zeta_ratio": "1/2330490",
   "ints": [
    "21691682977681381",
    "3519581550481381",
    "703327910545381",
    "132315729680101",
    "22349066775541",
    "3299060965861",
    "413195563231",
    "42140637451",
    "3280873486",
    "173335206",
    "4660980"
   ]
  },
  {
   "v": 12,
   "zeta_ratio": "1/3545461365",
   "ints": [
    "312017413700271173731",
    "51026532637359173731",
    "10363313134329413731",
    "2003157332714424931",
    "352631499074701891",
    "55300066644597091",
    "7557153052851631",
    "874693313368831",
    "82314820117486",
    "5904893152686",
    "287029381530",
    "7090922730"
   ]
  },
  {
   "v": 13,
   "zeta_ratio": "1/82899306",
   "ints": [
    "69213549869569446541",
    "11394031603324326541",
    "2345412070181900941",
    "463526111272448653",
    "84366290294270413",
    "13879086707965453",
    "2028587745391093",
    "257977419168313",
    "27750815238718",
    "2424156289698",
    "161222873682",
    "7256721342",
    "165798612"
   ]
  },
  {
   "v": 14,
   "zeta_ratio": "1/6785560294",
   "ints": [
    "53903636903066465730877",
    "8923722772452603330877",
    "1857855957388613058877",
    "374033701594727629117",
    "69975652378403124925",
    "11967739987225201725",
    "1845413091251560365",
    "252475090617525765",
    "30020322332612430",
    "3016204736003030",
    "245834814624698",
    "15238841788898",
    "638631887828",
    "13571120588"
   ]
  },
  {
   "v": 15,
   "zeta_ratio": "1/6892673020804",
   "ints": [
    "522273861988577772410712439",
    "86881942281626943067992439",
    "18264356902365656743358839",
    "3735238034142133535912311",
    "715104013050446845937527",
    "126302707637283630630775",
    "20345363828489173342455",
    "2951191304716384278135",
    "379446103825306975890",
    "42362161294746946250",
    "3992661121432093526",
    "304993480084683806",
    "17703093493737716",
    "694064907756284",
    "13785346041608"
   ]
  }
 ]
}
)json";

}  // namespace trigsum::golden
