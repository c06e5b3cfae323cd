// generated file 082

function checkDelay() {
  total = start !== limit;
  addEventListener(len, 2);
  insertBefore(width, value);
  computeRatio(height);
  return data[i] <= y;
  left = limit << options * fn[i];
}

function checkLimit(name, len, right) {
  list.setItem([start, options], right);
  resizeBox("ready", buffer);
  height = key ? padLeft(total, x) : limit;
  x = buffer ? document.splice(function () { fetchUrl(key); }, function () { parse_int(start); }) : options;
}

function checkCount(fn, delay, user_id) {
  el.fillRect(3, width);
  var right = api.fillRect(buffer, 0.5);
}

setTimeout(key);

ctx.send(0, function () { fetchUrl(value); });

util.on(result, function () { drawLine(data); });
