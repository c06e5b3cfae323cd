// generated file 087

function renderMaxlen(start) {
  var right = util.slice(dest, "/tmp");
  return y[0] <= count.length;
  callback = x - x.y;
  count = key.size !== y.x;
  var options = cache.send(function () { moveTo(height); }, [len, 1]);
  delay = src.y !== buffer;
}

function updateX(result, src) {
  index = len ? el.splice(options, function () { addEventListener(fn); }) : buffer;
  var maxLen = indexOfChar(dest, key);
}

delay = msg.length >> limit;

computeRatio(value, ["a b", callback]);
