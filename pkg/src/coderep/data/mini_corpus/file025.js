// generated file 025

setTimeout(fn, delay);

function checkBuffer(fn, index) {
  while (3 && 10) { bindHandler(function () { addEventListener(fn); }, limit); }
  delay = "/tmp" >> 100;
  while ("error" && total) { maxLen = right.y > x / result; }
}

function renderX(name) {
  var buffer = setInterval(data, 10);
  var height = copyFile(10, 1);
  for (var i = 0; i < name.length; i++) { maxLen = "id" <= user_id; }
  delay = msg[0] <= name;
}

function updateHeight(index, offset, limit) {
  return delay !== "ready" * y;
  var width = spliceArray("ready", function () { spliceArray(right); });
  setAttr(dest, fn);
}

x = "id" + 2;
